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

#include "qfib/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "qfib/rng.hpp"

namespace qfib {

namespace {

using Complex = std::complex<double>;

Eigen::MatrixXcd gaussian_matrix(Rng& rng, int rows, int cols) {
    Eigen::MatrixXcd g(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            g(i, j) = rng.cnormal();
        }
    }
    return g;
}

void check_same_dim(int a, int b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

}  // namespace

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)), lambda_min_(0.0) {
    const double tr_dev = std::abs(op_.matrix().trace().real() - 1.0) +
                          std::abs(op_.matrix().trace().imag());
    if (tr_dev > kTraceTol) {
        throw std::invalid_argument("DensityMatrix: trace must be 1");
    }
    const double lmin = qfib::lambda_min(op_);
    if (lmin < -kPsdTol) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
    }
    lambda_min_ = std::max(lmin, 0.0);
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
    const double norm2 = psi.squaredNorm();
    if (norm2 <= 0.0) {
        throw std::invalid_argument("DensityMatrix::pure: zero vector");
    }
    Eigen::MatrixXcd proj = (psi * psi.adjoint()) / norm2;
    proj = 0.5 * (proj + proj.adjoint()).eval();
    return DensityMatrix(HermitianOperator(std::move(proj)));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    return DensityMatrix(
        HermitianOperator(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim)));
}

TangentState::TangentState(DensityMatrix rho_in, HermitianOperator drho_in)
    : rho(std::move(rho_in)), drho(std::move(drho_in)) {
    check_same_dim(rho.dim(), drho.dim(), "TangentState");
    const Complex tr = drho.matrix().trace();
    if (std::abs(tr) > kTraceTol) {
        throw std::invalid_argument("TangentState: derivative must be traceless");
    }
}

KLocalHamiltonian::KLocalHamiltonian(int n_sites, int local_dim, int k,
                                     std::vector<KLocalTerm> terms)
    : n_sites_(n_sites), local_dim_(local_dim), k_(k), terms_(std::move(terms)) {
    if (n_sites_ < 1 || local_dim_ < 1 || k_ < 1 || k_ > n_sites_) {
        throw std::invalid_argument("KLocalHamiltonian: invalid sizes");
    }
    long block = 1;
    for (int i = 0; i < k_; ++i) {
        block *= local_dim_;
    }
    for (const auto& term : terms_) {
        if (static_cast<int>(term.sites.size()) != k_) {
            throw std::invalid_argument("KLocalHamiltonian: each subset must have exactly k sites");
        }
        std::set<int> unique(term.sites.begin(), term.sites.end());
        if (static_cast<int>(unique.size()) != k_) {
            throw std::invalid_argument("KLocalHamiltonian: subset sites must be distinct");
        }
        for (int site : term.sites) {
            if (site < 0 || site >= n_sites_) {
                throw std::invalid_argument("KLocalHamiltonian: site index out of range");
            }
        }
        if (term.op.dim() != block) {
            throw std::invalid_argument("KLocalHamiltonian: term dimension must be local_dim^k");
        }
    }
}

long KLocalHamiltonian::global_dim() const noexcept {
    long d = 1;
    for (int i = 0; i < n_sites_; ++i) {
        d *= local_dim_;
    }
    return d;
}

double KLocalHamiltonian::max_term_norm() const {
    double m = 0.0;
    for (const auto& term : terms_) {
        m = std::max(m, schatten_norm(term.op, kInf));
    }
    return m;
}

Povm::Povm(std::vector<HermitianOperator> effects) : effects_(std::move(effects)) {
    if (effects_.empty()) {
        throw std::invalid_argument("Povm: needs at least one effect");
    }
    const int d = effects_.front().dim();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& effect : effects_) {
        check_same_dim(effect.dim(), d, "Povm");
        if (lambda_min(effect) < -kPsdTol) {
            throw std::invalid_argument("Povm: effect is not positive semidefinite");
        }
        sum += effect.matrix();
    }
    const double dev = (sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > 1e-10) {
        throw std::invalid_argument("Povm: effects must sum to the identity");
    }
}

namespace {

double purity(const DensityMatrix& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

double fidelity_with_pure(const DensityMatrix& projector, const DensityMatrix& other) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(projector.matrix());
    const Eigen::VectorXcd psi = solver.eigenvectors().col(projector.dim() - 1);
    const double overlap = (psi.adjoint() * other.matrix() * psi)(0, 0).real();
    return std::sqrt(std::clamp(overlap, 0.0, 1.0));
}

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    check_same_dim(rho.dim(), sigma.dim(), "fidelity");
    // Rank-1 inputs take the exact projector formula; near F = 1 the
    // general route loses digits to square roots of noise-level
    // eigenvalues.
    if (purity(rho) >= 1.0 - 1e-13) {
        return fidelity_with_pure(rho, sigma);
    }
    if (purity(sigma) >= 1.0 - 1e-13) {
        return fidelity_with_pure(sigma, rho);
    }
    const Eigen::MatrixXcd root = psd_sqrt(rho.op());
    Eigen::MatrixXcd inner = root * sigma.matrix() * root;
    inner = 0.5 * (inner + inner.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(inner, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd values = solver.eigenvalues().cwiseMax(0.0);
    const double f = values.cwiseSqrt().sum();
    return std::min(f, 1.0 + 1e-12);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    check_same_dim(rho.dim(), sigma.dim(), "trace_distance");
    return schatten_norm(HermitianOperator(rho.matrix() - sigma.matrix()), 1.0);
}

BoundReport fvg_check(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const double f = fidelity(rho, sigma);
    const double half_dist = 0.5 * trace_distance(rho, sigma);
    const double lower = 1.0 - f;
    const double upper = std::sqrt(std::max(0.0, 1.0 - f * f));
    BoundReport report = make_report("fidelity-trace", half_dist, upper,
                                     {{"fidelity", f},
                                      {"one_minus_f", lower},
                                      {"half_trace_dist", half_dist},
                                      {"lower_slack", half_dist - lower}});
    const bool lower_ok = lower <= half_dist + satisfaction_tol(half_dist);
    report.satisfied = report.satisfied && lower_ok;
    return report;
}

Eigen::VectorXcd sample_haar_vector(int dim, std::uint64_t seed) {
    if (dim < 1) {
        throw std::invalid_argument("sample_haar_vector: dim must be >= 1");
    }
    Rng rng(seed);
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = rng.cnormal();
    }
    v /= v.norm();
    return v;
}

DensityMatrix sample_pure_haar(int dim, std::uint64_t seed) {
    return DensityMatrix::pure(sample_haar_vector(dim, seed));
}

DensityMatrix sample_mixed_ginibre(int dim, int rank, std::uint64_t seed) {
    if (rank < 1 || rank > dim) {
        throw std::invalid_argument("sample_mixed_ginibre: rank out of range");
    }
    Rng rng(seed);
    const Eigen::MatrixXcd g = gaussian_matrix(rng, dim, rank);
    Eigen::MatrixXcd w = g * g.adjoint();
    w = 0.5 * (w + w.adjoint()).eval();
    w /= w.trace().real();
    return DensityMatrix(HermitianOperator(std::move(w)));
}

DensityMatrix sample_full_rank_density(int dim, double lambda_floor, std::uint64_t seed) {
    if (lambda_floor <= 0.0 || lambda_floor >= 1.0 / dim) {
        throw std::invalid_argument("sample_full_rank_density: floor must lie in (0, 1/dim)");
    }
    DensityMatrix rho = sample_mixed_ginibre(dim, dim, seed);
    const double target =
        lambda_floor + 0.05 * std::min(lambda_floor, 1.0 / dim - lambda_floor);
    if (rho.lambda_min() < target) {
        const double beta = (target - rho.lambda_min()) / (1.0 / dim - rho.lambda_min());
        Eigen::MatrixXcd mixed =
            (1.0 - beta) * rho.matrix() +
            beta * Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
        rho = DensityMatrix(HermitianOperator(std::move(mixed)));
    }
    return rho;
}

TangentState sample_tangent(const DensityMatrix& rho, double scale, std::uint64_t seed) {
    if (scale <= 0.0) {
        throw std::invalid_argument("sample_tangent: scale must be positive");
    }
    Rng rng(seed);
    const int d = rho.dim();
    const Eigen::MatrixXcd g = gaussian_matrix(rng, d, d);
    Eigen::MatrixXcd x = 0.5 * (g + g.adjoint());
    x -= (x.trace() / static_cast<double>(d)) * Eigen::MatrixXcd::Identity(d, d);
    x *= scale;
    x = 0.5 * (x + x.adjoint()).eval();
    return TangentState(rho, HermitianOperator(std::move(x)));
}

Povm sample_projective_povm(int dim, std::uint64_t seed) {
    Rng rng(seed);
    const Eigen::MatrixXcd g = gaussian_matrix(rng, dim, dim);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the R-diagonal phases so Q is Haar distributed.
    for (int i = 0; i < dim; ++i) {
        const Complex rii = r(i, i);
        const double mag = std::abs(rii);
        if (mag > 0.0) {
            q.col(i) *= rii / mag;
        }
    }
    std::vector<HermitianOperator> effects;
    effects.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        Eigen::MatrixXcd proj = q.col(i) * q.col(i).adjoint();
        proj = 0.5 * (proj + proj.adjoint()).eval();
        effects.emplace_back(std::move(proj));
    }
    return Povm(std::move(effects));
}

TangentState phase_channel(const DensityMatrix& rho0, const HermitianOperator& h, double x) {
    check_same_dim(rho0.dim(), h.dim(), "phase_channel");
    const SpectralDecomposition sd = spectral(h);
    const auto phases =
        (Complex(0.0, -x) * sd.eigenvalues.array().cast<Complex>()).exp().matrix();
    const Eigen::MatrixXcd u =
        sd.eigenvectors * phases.asDiagonal() * sd.eigenvectors.adjoint();
    Eigen::MatrixXcd evolved = u * rho0.matrix() * u.adjoint();
    evolved = 0.5 * (evolved + evolved.adjoint()).eval();
    DensityMatrix rho{HermitianOperator(std::move(evolved))};
    Eigen::MatrixXcd commutator = h.matrix() * rho.matrix() - rho.matrix() * h.matrix();
    Eigen::MatrixXcd drho = Complex(0.0, -1.0) * commutator;
    drho = 0.5 * (drho + drho.adjoint()).eval();
    // Commutators are exactly traceless in exact arithmetic; remove roundoff.
    const int d = rho.dim();
    drho -= (drho.trace() / static_cast<double>(d)) * Eigen::MatrixXcd::Identity(d, d);
    return TangentState(std::move(rho), HermitianOperator(std::move(drho)));
}

HermitianOperator assemble_klocal(const KLocalHamiltonian& h) {
    const long dim = h.global_dim();
    const int n = h.n_sites();
    const int ld = h.local_dim();
    Eigen::MatrixXcd global = Eigen::MatrixXcd::Zero(dim, dim);

    // Big-endian site strides: site 0 is the most significant digit.
    std::vector<long> stride(static_cast<std::size_t>(n), 1);
    for (int s = n - 2; s >= 0; --s) {
        stride[static_cast<std::size_t>(s)] = stride[static_cast<std::size_t>(s + 1)] * ld;
    }

    for (const auto& term : h.terms()) {
        const int k = static_cast<int>(term.sites.size());
        long block = 1;
        for (int i = 0; i < k; ++i) {
            block *= ld;
        }
        // Strides of the complement sites enumerate the identity padding.
        std::vector<long> rest_strides;
        for (int s = 0; s < n; ++s) {
            if (std::find(term.sites.begin(), term.sites.end(), s) == term.sites.end()) {
                rest_strides.push_back(stride[static_cast<std::size_t>(s)]);
            }
        }
        const long rest_count = dim / block;

        auto subset_offset = [&](long idx) {
            long offset = 0;
            for (int i = k - 1; i >= 0; --i) {
                offset += (idx % ld) * stride[static_cast<std::size_t>(term.sites[static_cast<std::size_t>(i)])];
                idx /= ld;
            }
            return offset;
        };
        auto rest_offset = [&](long idx) {
            long offset = 0;
            for (auto it = rest_strides.rbegin(); it != rest_strides.rend(); ++it) {
                offset += (idx % ld) * (*it);
                idx /= ld;
            }
            return offset;
        };

        std::vector<long> sub(static_cast<std::size_t>(block));
        for (long i = 0; i < block; ++i) {
            sub[static_cast<std::size_t>(i)] = subset_offset(i);
        }
        for (long r = 0; r < rest_count; ++r) {
            const long base = rest_offset(r);
            for (long i = 0; i < block; ++i) {
                for (long j = 0; j < block; ++j) {
                    global(base + sub[static_cast<std::size_t>(i)],
                           base + sub[static_cast<std::size_t>(j)]) += term.op.matrix()(i, j);
                }
            }
        }
    }
    global = 0.5 * (global + global.adjoint()).eval();
    return HermitianOperator(std::move(global));
}

DensityMatrix tensor_product(const std::vector<DensityMatrix>& states) {
    if (states.empty()) {
        throw std::invalid_argument("tensor_product: empty list");
    }
    Eigen::MatrixXcd acc = states.front().matrix();
    for (std::size_t i = 1; i < states.size(); ++i) {
        acc = kronecker(acc, states[i].matrix());
    }
    acc = 0.5 * (acc + acc.adjoint()).eval();
    return DensityMatrix(HermitianOperator(std::move(acc)));
}

Eigen::MatrixXcd kronecker(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

Eigen::VectorXcd ghz_vector(int n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("ghz_vector: n_qubits must be >= 1");
    }
    const long dim = 1L << n_qubits;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi(0) = 1.0 / std::numbers::sqrt2;
    psi(dim - 1) = 1.0 / std::numbers::sqrt2;
    return psi;
}

}  // namespace qfib
