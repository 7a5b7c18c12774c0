// Copyright 2026 The qfibounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfib/operator_core.hpp"

#include <cmath>
#include <stdexcept>

#include "qfib/quadrature.hpp"

namespace qfib {

namespace {

double pnorm_from_values(const Eigen::VectorXd& values, double p) {
    if (p < 1.0) {
        throw std::domain_error("schatten_norm: p must be >= 1 or infinity");
    }
    const double vmax = values.size() > 0 ? values.maxCoeff() : 0.0;
    if (std::isinf(p) || vmax == 0.0) {
        return vmax;
    }
    if (p == 1.0) {
        return values.sum();
    }
    if (p == 2.0) {
        return std::sqrt(values.squaredNorm());
    }
    // Scale by the largest value so v^p cannot overflow for large p.
    double acc = 0.0;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        acc += std::pow(values(i) / vmax, p);
    }
    return vmax * std::pow(acc, 1.0 / p);
}

}  // namespace

HermitianOperator::HermitianOperator(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("HermitianOperator: matrix must be square with dim >= 1");
    }
    const double dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (dev > kHermitianTol) {
        throw std::invalid_argument("HermitianOperator: input is not Hermitian within tolerance");
    }
}

HermitianOperator HermitianOperator::identity(int dim) {
    return HermitianOperator(Eigen::MatrixXcd::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(int dim) {
    return HermitianOperator(Eigen::MatrixXcd::Zero(dim, dim));
}

SpectralDecomposition spectral(const HermitianOperator& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("spectral: Hermitian eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double schatten_norm(const HermitianOperator& a, double p) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix(), Eigen::EigenvaluesOnly);
    return pnorm_from_values(solver.eigenvalues().cwiseAbs(), p);
}

double schatten_norm(const Eigen::MatrixXcd& a, double p) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    return pnorm_from_values(svd.singularValues(), p);
}

double lambda_min(const HermitianOperator& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

HermitianOperator herm_exp(const HermitianOperator& a, double t) {
    const SpectralDecomposition sd = spectral(a);
    const Eigen::VectorXd scaled = (t * sd.eigenvalues.array()).exp();
    Eigen::MatrixXcd result =
        sd.eigenvectors * scaled.asDiagonal() * sd.eigenvectors.adjoint();
    // Spectral form is Hermitian up to roundoff; fold it back exactly.
    result = 0.5 * (result + result.adjoint()).eval();
    return HermitianOperator(std::move(result));
}

Eigen::MatrixXcd psd_sqrt(const HermitianOperator& a) {
    const SpectralDecomposition sd = spectral(a);
    const Eigen::VectorXd roots = sd.eigenvalues.cwiseMax(0.0).cwiseSqrt();
    Eigen::MatrixXcd result = sd.eigenvectors * roots.asDiagonal() * sd.eigenvectors.adjoint();
    return 0.5 * (result + result.adjoint());
}

double exp_identity_residual(const HermitianOperator& a, const HermitianOperator& b, int nodes) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("exp_identity_residual: dimension mismatch");
    }
    if (nodes < 1) {
        throw std::invalid_argument("exp_identity_residual: node count must be >= 1");
    }
    const SpectralDecomposition sa = spectral(a);
    const SpectralDecomposition sb = spectral(b);
    const Eigen::MatrixXcd diff = a.matrix() - b.matrix();

    auto exp_of = [](const SpectralDecomposition& sd, double t) {
        const Eigen::VectorXd scaled = (t * sd.eigenvalues.array()).exp();
        return Eigen::MatrixXcd(sd.eigenvectors * scaled.asDiagonal() * sd.eigenvectors.adjoint());
    };

    const QuadratureRule rule = gauss_legendre(nodes, 0.0, 1.0);
    Eigen::MatrixXcd integral = Eigen::MatrixXcd::Zero(a.dim(), a.dim());
    for (int i = 0; i < nodes; ++i) {
        const double tau = rule.nodes[static_cast<std::size_t>(i)];
        integral += rule.weights[static_cast<std::size_t>(i)] *
                    (exp_of(sa, tau) * diff * exp_of(sb, 1.0 - tau));
    }
    const Eigen::MatrixXcd residual = exp_of(sa, 1.0) - exp_of(sb, 1.0) - integral;
    return schatten_norm(residual, 1.0);
}

}  // namespace qfib
