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

#include "qfib/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qfib/quadrature.hpp"

namespace qfib {

namespace {

using Complex = std::complex<double>;

double defining_residual(const TangentState& t, const Eigen::MatrixXcd& l) {
    const Eigen::MatrixXcd mismatch =
        t.drho.matrix() - 0.5 * (l * t.rho.matrix() + t.rho.matrix() * l);
    return schatten_norm(mismatch, 1.0);
}

}  // namespace

SldResult sld_spectral(const TangentState& t, double cutoff) {
    if (cutoff <= 0.0) {
        throw std::invalid_argument("sld_spectral: cutoff must be positive");
    }
    const SpectralDecomposition sd = spectral(t.rho.op());
    const int d = t.dim();
    const double lmax = sd.eigenvalues(d - 1);
    const double threshold = cutoff * std::max(lmax, 0.0);

    const Eigen::MatrixXcd dr = sd.eigenvectors.adjoint() * t.drho.matrix() * sd.eigenvectors;
    Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double denom = sd.eigenvalues(i) + sd.eigenvalues(j);
            if (denom > threshold) {
                l(i, j) = 2.0 * dr(i, j) / denom;
            }
        }
    }
    Eigen::MatrixXcd l_full = sd.eigenvectors * l * sd.eigenvectors.adjoint();
    l_full = 0.5 * (l_full + l_full.adjoint()).eval();

    int support = 0;
    for (int i = 0; i < d; ++i) {
        if (sd.eigenvalues(i) > threshold) {
            ++support;
        }
    }
    SldResult result{HermitianOperator(std::move(l_full)), support, 0.0};
    result.residual = defining_residual(t, result.l.matrix());
    return result;
}

SldResult sld_integral(const TangentState& t, double s_max, int nodes) {
    if (t.rho.lambda_min() <= 0.0) {
        throw std::domain_error("sld_integral: state must be full rank");
    }
    if (s_max <= 0.0 || nodes < 1) {
        throw std::invalid_argument("sld_integral: s_max and nodes must be positive");
    }
    const SpectralDecomposition sd = spectral(t.rho.op());
    const int d = t.dim();
    const QuadratureRule rule = gauss_legendre(nodes, 0.0, s_max);

    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
    for (int q = 0; q < nodes; ++q) {
        const double s = rule.nodes[static_cast<std::size_t>(q)];
        const Eigen::VectorXd decay = (-s * sd.eigenvalues.array()).exp();
        const Eigen::MatrixXcd exp_s =
            sd.eigenvectors * decay.asDiagonal() * sd.eigenvectors.adjoint();
        acc += rule.weights[static_cast<std::size_t>(q)] * (exp_s * t.drho.matrix() * exp_s);
    }
    Eigen::MatrixXcd l = 2.0 * acc;
    l = 0.5 * (l + l.adjoint()).eval();
    SldResult result{HermitianOperator(std::move(l)), d, 0.0};
    result.residual = defining_residual(t, result.l.matrix());
    return result;
}

double sld_integral_s_max(const TangentState& t, double tail_eps) {
    const double lmin = t.rho.lambda_min();
    if (lmin <= 0.0) {
        throw std::domain_error("sld_integral_s_max: state must be full rank");
    }
    const double dnorm = schatten_norm(t.drho, kInf);
    if (dnorm == 0.0) {
        return 1.0;
    }
    return std::log(dnorm / (tail_eps * lmin)) / (2.0 * lmin);
}

int sld_integral_nodes(const TangentState& t, double s_max) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(t.rho.matrix(), Eigen::EigenvaluesOnly);
    const double lmax = solver.eigenvalues()(t.dim() - 1);
    // Plain Gauss-Legendre resolves e^{-c s} on [0, L] once n exceeds
    // roughly c L / 4; 0.45 c L leaves headroom (calibrated in tests).
    const double needed = 0.45 * (2.0 * lmax) * s_max;
    const int n = static_cast<int>(std::ceil(needed));
    return std::clamp(n, 128, 4096);
}

SldResult sld_integral_auto(const TangentState& t, double tail_eps) {
    const double s_max = sld_integral_s_max(t, tail_eps);
    return sld_integral(t, s_max, sld_integral_nodes(t, s_max));
}

double qfi(const TangentState& t) {
    const SldResult sld = sld_spectral(t);
    const Eigen::MatrixXcd& l = sld.l.matrix();
    return (t.rho.matrix() * l * l).trace().real();
}

double qfi_pure_oracle(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& dpsi) {
    if (psi.size() != dpsi.size()) {
        throw std::invalid_argument("qfi_pure_oracle: size mismatch");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("qfi_pure_oracle: psi must be normalized");
    }
    const double dd = dpsi.squaredNorm();
    const Complex overlap = psi.adjoint() * dpsi;
    return std::max(0.0, 4.0 * (dd - std::norm(overlap)));
}

double classical_fi(const Eigen::VectorXd& p, const Eigen::VectorXd& dp) {
    if (p.size() != dp.size()) {
        throw std::invalid_argument("classical_fi: size mismatch");
    }
    if (p.size() == 0) {
        throw std::invalid_argument("classical_fi: empty distribution");
    }
    if (p.minCoeff() < -1e-12) {
        throw std::domain_error("classical_fi: negative probability");
    }
    if (std::abs(p.sum() - 1.0) > 1e-9) {
        throw std::domain_error("classical_fi: probabilities must sum to 1");
    }
    if (std::abs(dp.sum()) > 1e-9) {
        throw std::domain_error("classical_fi: derivatives must sum to 0");
    }
    double fi = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) <= 1e-15) {
            if (std::abs(dp(i)) > 1e-12) {
                throw std::domain_error(
                    "classical_fi: derivative support exceeds probability support");
            }
            continue;  // removable singularity
        }
        fi += dp(i) * dp(i) / p(i);
    }
    return fi;
}

double povm_cfi(const TangentState& t, const Povm& m) {
    if (t.dim() != m.dim()) {
        throw std::invalid_argument("povm_cfi: dimension mismatch");
    }
    const auto& effects = m.effects();
    const Eigen::Index n = static_cast<Eigen::Index>(effects.size());
    Eigen::VectorXd p(n);
    Eigen::VectorXd dp(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& e = effects[static_cast<std::size_t>(i)].matrix();
        p(i) = std::max(0.0, (t.rho.matrix() * e).trace().real());
        dp(i) = (t.drho.matrix() * e).trace().real();
    }
    p /= p.sum();
    dp.array() -= dp.sum() / static_cast<double>(n);
    return classical_fi(p, dp);
}

CrbResult cramer_rao(double fisher_value, long repetitions) {
    if (fisher_value < 0.0) {
        throw std::domain_error("cramer_rao: Fisher information must be nonnegative");
    }
    if (repetitions < 1) {
        throw std::invalid_argument("cramer_rao: repetitions must be >= 1");
    }
    CrbResult result{fisher_value, repetitions, kInf};
    if (fisher_value > 0.0) {
        result.delta_x_lower = 1.0 / std::sqrt(static_cast<double>(repetitions) * fisher_value);
    }
    return result;
}

BoundReport extended_convexity_gap(const std::vector<WeightedTangent>& components,
                                   const Eigen::VectorXd& dweights) {
    if (components.empty()) {
        throw std::invalid_argument("extended_convexity_gap: no components");
    }
    if (dweights.size() != static_cast<Eigen::Index>(components.size())) {
        throw std::invalid_argument("extended_convexity_gap: weight derivative size mismatch");
    }
    const int d = components.front().state.dim();
    Eigen::VectorXd weights(dweights.size());
    for (Eigen::Index a = 0; a < dweights.size(); ++a) {
        const auto& c = components[static_cast<std::size_t>(a)];
        if (c.state.dim() != d) {
            throw std::invalid_argument("extended_convexity_gap: dimension mismatch");
        }
        if (c.weight < 0.0) {
            throw std::invalid_argument("extended_convexity_gap: negative weight");
        }
        weights(a) = c.weight;
    }
    if (std::abs(weights.sum() - 1.0) > 1e-9) {
        throw std::invalid_argument("extended_convexity_gap: weights must sum to 1");
    }
    if (std::abs(dweights.sum()) > 1e-9) {
        throw std::invalid_argument("extended_convexity_gap: weight derivatives must sum to 0");
    }

    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd dmix = Eigen::MatrixXcd::Zero(d, d);
    double avg_qfi = 0.0;
    for (Eigen::Index a = 0; a < dweights.size(); ++a) {
        const auto& c = components[static_cast<std::size_t>(a)];
        mix += weights(a) * c.state.rho.matrix();
        dmix += dweights(a) * c.state.rho.matrix() + weights(a) * c.state.drho.matrix();
        avg_qfi += weights(a) * qfi(c.state);
    }
    mix = 0.5 * (mix + mix.adjoint()).eval();
    dmix = 0.5 * (dmix + dmix.adjoint()).eval();
    dmix -= (dmix.trace() / static_cast<double>(d)) * Eigen::MatrixXcd::Identity(d, d);
    const TangentState mixture{DensityMatrix(HermitianOperator(std::move(mix))),
                               HermitianOperator(std::move(dmix))};

    const double lhs = qfi(mixture);
    const double classical = classical_fi(weights, dweights);
    const double rhs = classical + avg_qfi;
    return make_report("ext-convexity", lhs, rhs,
                       {{"classical_term", classical}, {"avg_component_qfi", avg_qfi}});
}

TangentState tensor_tangent(const TangentState& t1, const TangentState& t2) {
    Eigen::MatrixXcd rho = kronecker(t1.rho.matrix(), t2.rho.matrix());
    Eigen::MatrixXcd drho = kronecker(t1.drho.matrix(), t2.rho.matrix()) +
                            kronecker(t1.rho.matrix(), t2.drho.matrix());
    rho = 0.5 * (rho + rho.adjoint()).eval();
    drho = 0.5 * (drho + drho.adjoint()).eval();
    return TangentState(DensityMatrix(HermitianOperator(std::move(rho))),
                        HermitianOperator(std::move(drho)));
}

BoundReport qfi_additivity_check(const TangentState& t1, const TangentState& t2) {
    const double f1 = qfi(t1);
    const double f2 = qfi(t2);
    const double f12 = qfi(tensor_tangent(t1, t2));
    const double gap = std::abs(f12 - f1 - f2);
    return make_report("qfi-additivity", gap, 1e-8,
                       {{"qfi_product", f12}, {"qfi_1", f1}, {"qfi_2", f2}});
}

}  // namespace qfib
