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

#include "qfib/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qfib/parallel.hpp"
#include "qfib/rng.hpp"

namespace qfib {

namespace {

using Complex = std::complex<double>;

long power_dim(int local_dim, int n_sites) {
    long d = 1;
    for (int i = 0; i < n_sites; ++i) {
        d *= local_dim;
    }
    return d;
}

/// Big-endian strides: stride[0] is the largest.
std::vector<long> site_strides(int n_sites, int local_dim) {
    std::vector<long> stride(static_cast<std::size_t>(n_sites), 1);
    for (int s = n_sites - 2; s >= 0; --s) {
        stride[static_cast<std::size_t>(s)] = stride[static_cast<std::size_t>(s + 1)] * local_dim;
    }
    return stride;
}

Eigen::VectorXcd random_local_vector(Rng& rng, int local_dim) {
    Eigen::VectorXcd v(local_dim);
    for (int i = 0; i < local_dim; ++i) {
        v(i) = rng.cnormal();
    }
    v /= v.norm();
    return v;
}

/// Partial inner product: v[alpha] = sum over basis states with site j in
/// slot alpha of psi_I * prod_{s != j} conj(a_s[digit_s]).
Eigen::VectorXcd partial_overlap(const Eigen::VectorXcd& psi,
                                 const std::vector<Eigen::VectorXcd>& factors, int j,
                                 const std::vector<long>& stride, int local_dim) {
    const int n = static_cast<int>(factors.size());
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(local_dim);
    for (long idx = 0; idx < psi.size(); ++idx) {
        Complex c = psi(idx);
        if (c == Complex(0.0, 0.0)) {
            continue;
        }
        int slot = 0;
        for (int s = 0; s < n; ++s) {
            const int digit = static_cast<int>((idx / stride[static_cast<std::size_t>(s)]) % local_dim);
            if (s == j) {
                slot = digit;
            } else {
                c *= std::conj(factors[static_cast<std::size_t>(s)](digit));
            }
        }
        v(slot) += c;
    }
    return v;
}

struct PureAlsOutcome {
    double overlap = 0.0;
    std::vector<Eigen::VectorXcd> factors;
    bool converged = false;
};

PureAlsOutcome pure_als(const Eigen::VectorXcd& psi, int n_sites, int local_dim,
                        std::uint64_t seed, int max_sweeps, double tol) {
    const auto stride = site_strides(n_sites, local_dim);
    Rng rng(seed);
    PureAlsOutcome out;
    out.factors.reserve(static_cast<std::size_t>(n_sites));
    for (int s = 0; s < n_sites; ++s) {
        out.factors.push_back(random_local_vector(rng, local_dim));
    }
    double prev = -1.0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double overlap = 0.0;
        for (int j = 0; j < n_sites; ++j) {
            Eigen::VectorXcd v = partial_overlap(psi, out.factors, j, stride, local_dim);
            const double norm = v.norm();
            if (norm < 1e-300) {
                out.factors[static_cast<std::size_t>(j)] = random_local_vector(rng, local_dim);
                continue;
            }
            out.factors[static_cast<std::size_t>(j)] = v / norm;
            overlap = norm;
        }
        out.overlap = overlap;
        if (std::abs(overlap - prev) < tol) {
            out.converged = true;
            break;
        }
        prev = overlap;
    }
    return out;
}

/// Fidelity F(rho, sigma) from a precomputed sqrt(rho); sigma passed as a
/// raw Hermitian matrix so see-saw iterations skip revalidation.
double fidelity_from_sqrt(const Eigen::MatrixXcd& sqrt_rho, const Eigen::MatrixXcd& sigma) {
    Eigen::MatrixXcd inner = sqrt_rho * sigma * sqrt_rho;
    inner = 0.5 * (inner + inner.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(inner, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
}

/// Fidelity gradient with respect to sigma:
/// 0.5 sqrt(rho) (sqrt(rho) sigma sqrt(rho))^{-1/2} sqrt(rho) on the
/// support (pseudo-inverse below the relative cutoff).
Eigen::MatrixXcd fidelity_gradient(const Eigen::MatrixXcd& sqrt_rho,
                                   const Eigen::MatrixXcd& sigma) {
    Eigen::MatrixXcd inner = sqrt_rho * sigma * sqrt_rho;
    inner = 0.5 * (inner + inner.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(inner);
    const Eigen::VectorXd values = solver.eigenvalues();
    const double cutoff = 1e-14 * std::max(values.maxCoeff(), 0.0);
    Eigen::VectorXd inv_roots = Eigen::VectorXd::Zero(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (values(i) > cutoff && values(i) > 0.0) {
            inv_roots(i) = 1.0 / std::sqrt(values(i));
        }
    }
    Eigen::MatrixXcd mid =
        solver.eigenvectors() * inv_roots.asDiagonal() * solver.eigenvectors().adjoint();
    Eigen::MatrixXcd grad = 0.5 * sqrt_rho * mid * sqrt_rho;
    return 0.5 * (grad + grad.adjoint());
}

Eigen::VectorXd project_simplex(Eigen::VectorXd v) {
    const Eigen::Index n = v.size();
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cumulative = 0.0;
    double tau = 0.0;
    int support = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        cumulative += u[static_cast<std::size_t>(j)];
        const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
        if (u[static_cast<std::size_t>(j)] - candidate > 0.0) {
            tau = candidate;
            support = static_cast<int>(j + 1);
        }
    }
    (void)support;
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = std::max(v(i) - tau, 0.0);
    }
    const double total = v.sum();
    if (total > 0.0) {
        v /= total;
    } else {
        v.setConstant(1.0 / static_cast<double>(n));
    }
    return v;
}

Eigen::VectorXcd product_vector(const std::vector<Eigen::VectorXcd>& factors) {
    Eigen::VectorXcd acc = factors.front();
    for (std::size_t s = 1; s < factors.size(); ++s) {
        Eigen::VectorXcd next(acc.size() * factors[s].size());
        for (Eigen::Index i = 0; i < acc.size(); ++i) {
            next.segment(i * factors[s].size(), factors[s].size()) = acc(i) * factors[s];
        }
        acc.swap(next);
    }
    return acc;
}

}  // namespace

SeparableAnsatz::SeparableAnsatz(int n_sites, int local_dim, Eigen::VectorXd weights,
                                 std::vector<std::vector<Eigen::VectorXcd>> factors)
    : n_sites_(n_sites), local_dim_(local_dim), weights_(std::move(weights)),
      factors_(std::move(factors)) {
    if (n_sites_ < 1 || local_dim_ < 1) {
        throw std::invalid_argument("SeparableAnsatz: invalid sizes");
    }
    if (weights_.size() == 0 ||
        factors_.size() != static_cast<std::size_t>(weights_.size())) {
        throw std::invalid_argument("SeparableAnsatz: weights/factors size mismatch");
    }
    if (weights_.minCoeff() < -1e-12 || std::abs(weights_.sum() - 1.0) > 1e-12) {
        throw std::invalid_argument("SeparableAnsatz: weights must lie on the simplex");
    }
    for (const auto& component : factors_) {
        if (component.size() != static_cast<std::size_t>(n_sites_)) {
            throw std::invalid_argument("SeparableAnsatz: wrong site count");
        }
        for (const auto& factor : component) {
            if (factor.size() != local_dim_) {
                throw std::invalid_argument("SeparableAnsatz: wrong factor dimension");
            }
            if (std::abs(factor.norm() - 1.0) > 1e-12) {
                throw std::invalid_argument("SeparableAnsatz: factors must be unit vectors");
            }
        }
    }
}

Eigen::VectorXcd SeparableAnsatz::component_vector(int a) const {
    return product_vector(factors_[static_cast<std::size_t>(a)]);
}

DensityMatrix SeparableAnsatz::assemble() const {
    const long d = power_dim(local_dim_, n_sites_);
    Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(d, d);
    for (int a = 0; a < n_components(); ++a) {
        if (weights_(a) <= 0.0) {
            continue;
        }
        const Eigen::VectorXcd v = component_vector(a);
        sigma += weights_(a) * (v * v.adjoint());
    }
    sigma = 0.5 * (sigma + sigma.adjoint()).eval();
    return DensityMatrix(HermitianOperator(std::move(sigma)));
}

SeparableAnsatz SeparableAnsatz::mixed_with_identity(double gamma) const {
    if (gamma < 0.0 || gamma >= 1.0) {
        throw std::invalid_argument("SeparableAnsatz: gamma must lie in [0, 1)");
    }
    const long d = power_dim(local_dim_, n_sites_);
    Eigen::VectorXd weights(weights_.size() + d);
    weights.head(weights_.size()) = (1.0 - gamma) * weights_;
    weights.tail(d).setConstant(gamma / static_cast<double>(d));

    std::vector<std::vector<Eigen::VectorXcd>> factors = factors_;
    factors.reserve(factors.size() + static_cast<std::size_t>(d));
    const auto stride = site_strides(n_sites_, local_dim_);
    for (long idx = 0; idx < d; ++idx) {
        std::vector<Eigen::VectorXcd> component;
        component.reserve(static_cast<std::size_t>(n_sites_));
        for (int s = 0; s < n_sites_; ++s) {
            const int digit =
                static_cast<int>((idx / stride[static_cast<std::size_t>(s)]) % local_dim_);
            Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(local_dim_);
            basis(digit) = 1.0;
            component.push_back(std::move(basis));
        }
        factors.push_back(std::move(component));
    }
    return SeparableAnsatz(n_sites_, local_dim_, std::move(weights), std::move(factors));
}

EgResult eg_pure(const Eigen::VectorXcd& psi, int n_sites, int local_dim, int restarts,
                 std::uint64_t seed) {
    if (psi.size() != power_dim(local_dim, n_sites)) {
        throw std::invalid_argument("eg_pure: dimension must equal local_dim^n_sites");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("eg_pure: psi must be a unit vector");
    }
    if (restarts < 1) {
        throw std::invalid_argument("eg_pure: restarts must be >= 1");
    }

    std::vector<PureAlsOutcome> outcomes(static_cast<std::size_t>(restarts));
    parallel_for(restarts, [&](long r) {
        outcomes[static_cast<std::size_t>(r)] =
            pure_als(psi, n_sites, local_dim, derive_seed(seed, 0xE6, static_cast<std::uint64_t>(r)),
                     500, 1e-12);
    });

    // Strictly-greater keeps the earliest restart on ties.
    std::size_t best = 0;
    for (std::size_t r = 1; r < outcomes.size(); ++r) {
        if (outcomes[r].overlap > outcomes[best].overlap) {
            best = r;
        }
    }
    const PureAlsOutcome& winner = outcomes[best];
    const double fid_sq = std::min(winner.overlap * winner.overlap, 1.0);
    Eigen::VectorXd weight(1);
    weight << 1.0;
    SeparableAnsatz ansatz(n_sites, local_dim, weight, {winner.factors});
    return EgResult{std::max(0.0, 1.0 - fid_sq), std::move(ansatz), fid_sq, restarts,
                    winner.converged};
}

double eg_brute(const Eigen::VectorXcd& psi, int grid) {
    if (psi.size() != 4) {
        throw std::invalid_argument("eg_brute: exactly two qubits required");
    }
    if (grid < 2) {
        throw std::invalid_argument("eg_brute: grid must be >= 2");
    }
    // psi reshaped with site 0 as the row index.
    Eigen::Matrix2cd m;
    m << psi(0), psi(1), psi(2), psi(3);

    std::vector<Eigen::Vector2cd> bloch;
    bloch.reserve(static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid));
    for (int it = 0; it < grid; ++it) {
        const double theta = std::numbers::pi * (it + 0.5) / grid;
        for (int ip = 0; ip < grid; ++ip) {
            const double phi = 2.0 * std::numbers::pi * (ip + 0.5) / grid;
            Eigen::Vector2cd v;
            v << std::cos(0.5 * theta),
                std::polar(std::sin(0.5 * theta), phi);
            bloch.push_back(v);
        }
    }

    double best = 0.0;
    for (const auto& b : bloch) {
        const Eigen::Vector2cd w = m * b.conjugate();
        for (const auto& a : bloch) {
            // dot conjugates its first argument: a.dot(w) = sum conj(a_i) w_i.
            best = std::max(best, std::norm(a.dot(w)));
        }
    }
    return std::max(0.0, 1.0 - best);
}

namespace {

struct SeesawState {
    Eigen::VectorXd weights;
    std::vector<std::vector<Eigen::VectorXcd>> factors;
    std::vector<Eigen::VectorXcd> component_vectors;
    Eigen::MatrixXcd sigma;
    double fidelity = 0.0;
};

Eigen::MatrixXcd assemble_sigma(const Eigen::VectorXd& weights,
                                const std::vector<Eigen::VectorXcd>& vectors) {
    const Eigen::Index d = vectors.front().size();
    Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index a = 0; a < weights.size(); ++a) {
        if (weights(a) > 0.0) {
            sigma += weights(a) * (vectors[static_cast<std::size_t>(a)] *
                                   vectors[static_cast<std::size_t>(a)].adjoint());
        }
    }
    return 0.5 * (sigma + sigma.adjoint());
}

struct SeesawOutcome {
    Eigen::VectorXd weights;
    std::vector<std::vector<Eigen::VectorXcd>> factors;
    double fidelity = 0.0;
    std::vector<double> trace;
    bool converged = false;
};

SeesawOutcome seesaw_run(const Eigen::MatrixXcd& sqrt_rho, const Eigen::VectorXcd& top_eigvec,
                         int n_sites, int local_dim, int n_components, std::uint64_t seed,
                         int max_sweeps) {
    const auto stride = site_strides(n_sites, local_dim);
    const long d = power_dim(local_dim, n_sites);
    Rng rng(seed);

    SeesawState st;
    st.weights = Eigen::VectorXd::Constant(n_components, 1.0 / n_components);
    st.factors.resize(static_cast<std::size_t>(n_components));
    for (int a = 0; a < n_components; ++a) {
        auto& comp = st.factors[static_cast<std::size_t>(a)];
        comp.reserve(static_cast<std::size_t>(n_sites));
        for (int s = 0; s < n_sites; ++s) {
            comp.push_back(random_local_vector(rng, local_dim));
        }
    }
    // Seed component 0 with a rank-1 fit of the dominant eigenvector; for
    // nearly pure targets this is the basin the global optimum lives in.
    if (top_eigvec.size() == d) {
        const PureAlsOutcome fit =
            pure_als(top_eigvec, n_sites, local_dim, derive_seed(seed, 0xA1, 0), 200, 1e-10);
        st.factors[0] = fit.factors;
    }

    st.component_vectors.resize(static_cast<std::size_t>(n_components));
    for (int a = 0; a < n_components; ++a) {
        st.component_vectors[static_cast<std::size_t>(a)] =
            product_vector(st.factors[static_cast<std::size_t>(a)]);
    }
    st.sigma = assemble_sigma(st.weights, st.component_vectors);
    st.fidelity = fidelity_from_sqrt(sqrt_rho, st.sigma);

    SeesawOutcome out;
    out.trace.push_back(st.fidelity);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double sweep_start = st.fidelity;
        const Eigen::MatrixXcd grad = fidelity_gradient(sqrt_rho, st.sigma);

        // Weight step: projected gradient ascent with backtracking.
        Eigen::VectorXd grad_q(n_components);
        for (int a = 0; a < n_components; ++a) {
            const auto& v = st.component_vectors[static_cast<std::size_t>(a)];
            grad_q(a) = (v.adjoint() * grad * v)(0, 0).real();
        }
        const double scale = grad_q.cwiseAbs().maxCoeff();
        if (scale > 0.0) {
            double eta = 1.0 / scale;
            for (int attempt = 0; attempt < 6; ++attempt) {
                const Eigen::VectorXd candidate = project_simplex(st.weights + eta * grad_q);
                const Eigen::MatrixXcd sigma_new = assemble_sigma(candidate, st.component_vectors);
                const double f_new = fidelity_from_sqrt(sqrt_rho, sigma_new);
                if (f_new >= st.fidelity) {
                    st.weights = candidate;
                    st.sigma = sigma_new;
                    st.fidelity = f_new;
                    break;
                }
                eta *= 0.5;
            }
        }

        // Factor step per component: local gradient eigenvector updates,
        // rolled back unless the exact fidelity improves.
        for (int a = 0; a < n_components; ++a) {
            if (st.weights(a) <= 1e-14) {
                continue;
            }
            auto proposal = st.factors[static_cast<std::size_t>(a)];
            for (int j = 0; j < n_sites; ++j) {
                // Slotted products c_I = prod_{s != j} a_s[digit_s].
                Eigen::MatrixXcd slotted = Eigen::MatrixXcd::Zero(d, local_dim);
                for (long idx = 0; idx < d; ++idx) {
                    Complex c(1.0, 0.0);
                    int slot = 0;
                    for (int s = 0; s < n_sites; ++s) {
                        const int digit = static_cast<int>(
                            (idx / stride[static_cast<std::size_t>(s)]) % local_dim);
                        if (s == j) {
                            slot = digit;
                        } else {
                            c *= proposal[static_cast<std::size_t>(s)](digit);
                        }
                    }
                    slotted(idx, slot) = c;
                }
                const Eigen::MatrixXcd local =
                    slotted.adjoint() * grad * slotted;  // local_dim x local_dim
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
                    0.5 * (local + local.adjoint()));
                proposal[static_cast<std::size_t>(j)] =
                    solver.eigenvectors().col(local_dim - 1);
            }
            const Eigen::VectorXcd v_new = product_vector(proposal);
            const auto& v_old = st.component_vectors[static_cast<std::size_t>(a)];
            Eigen::MatrixXcd sigma_new =
                st.sigma + st.weights(a) * (v_new * v_new.adjoint() - v_old * v_old.adjoint());
            sigma_new = 0.5 * (sigma_new + sigma_new.adjoint()).eval();
            const double f_new = fidelity_from_sqrt(sqrt_rho, sigma_new);
            if (f_new >= st.fidelity) {
                st.factors[static_cast<std::size_t>(a)] = std::move(proposal);
                st.component_vectors[static_cast<std::size_t>(a)] = v_new;
                st.sigma = std::move(sigma_new);
                st.fidelity = f_new;
            }
        }

        out.trace.push_back(st.fidelity);
        if (st.fidelity - sweep_start < 1e-10) {
            out.converged = true;
            break;
        }
    }

    out.weights = std::move(st.weights);
    out.factors = std::move(st.factors);
    out.fidelity = st.fidelity;
    return out;
}

}  // namespace

SeparableSearchResult closest_separable(const DensityMatrix& rho, int n_sites, int local_dim,
                                        int n_components, int restarts, std::uint64_t seed) {
    const long d = power_dim(local_dim, n_sites);
    if (rho.dim() != d) {
        throw std::invalid_argument("closest_separable: dimension must equal local_dim^n_sites");
    }
    if (n_components < 1) {
        n_components = static_cast<int>(2 * d);
    }
    if (restarts < 1) {
        throw std::invalid_argument("closest_separable: restarts must be >= 1");
    }

    const Eigen::MatrixXcd sqrt_rho = psd_sqrt(rho.op());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
    const Eigen::VectorXcd top = solver.eigenvectors().col(rho.dim() - 1);

    std::vector<SeesawOutcome> outcomes(static_cast<std::size_t>(restarts));
    parallel_for(restarts, [&](long r) {
        outcomes[static_cast<std::size_t>(r)] =
            seesaw_run(sqrt_rho, top, n_sites, local_dim, n_components,
                       derive_seed(seed, 0xC5, static_cast<std::uint64_t>(r)), 200);
    });

    std::size_t best = 0;
    for (std::size_t r = 1; r < outcomes.size(); ++r) {
        if (outcomes[r].fidelity > outcomes[best].fidelity) {
            best = r;
        }
    }
    SeesawOutcome& winner = outcomes[best];

    // Renormalize weights exactly onto the simplex for the ansatz invariant.
    Eigen::VectorXd weights = winner.weights.cwiseMax(0.0);
    weights /= weights.sum();
    for (auto& component : winner.factors) {
        for (auto& factor : component) {
            factor /= factor.norm();
        }
    }
    SeparableAnsatz ansatz(n_sites, local_dim, std::move(weights), std::move(winner.factors));
    return SeparableSearchResult{std::move(ansatz), winner.fidelity, std::move(winner.trace),
                                 restarts, winner.converged};
}

BoundReport eg_trace_bound_check(const DensityMatrix& rho, const SeparableAnsatz& ansatz) {
    const DensityMatrix sigma = ansatz.assemble();
    if (sigma.dim() != rho.dim()) {
        throw std::invalid_argument("eg_trace_bound_check: dimension mismatch");
    }
    const double f = fidelity(rho, sigma);
    const double eg_estimate = std::max(0.0, 1.0 - f * f);
    const double lhs = trace_distance(rho, sigma);
    return make_report("eg-trace", lhs, 2.0 * std::sqrt(eg_estimate),
                       {{"fidelity", f}, {"eg_estimate", eg_estimate}});
}

BoundReport eg_qfi_bound(const TangentState& t_rho, const TangentState& t_sigma_star, double eg,
                         double full_rank_floor) {
    if (t_rho.dim() != t_sigma_star.dim()) {
        throw std::invalid_argument("eg_qfi_bound: dimension mismatch");
    }
    if (eg < -1e-12 || eg > 1.0 + 1e-12) {
        throw std::invalid_argument("eg_qfi_bound: eg must lie in [0, 1]");
    }
    const double eg_clamped = std::clamp(eg, 0.0, 1.0);
    const ContinuityCoefficients c =
        continuity_coefficients(t_rho, t_sigma_star, full_rank_floor);
    const double ddiff = schatten_norm(
        Eigen::MatrixXcd(t_rho.drho.matrix() - t_sigma_star.drho.matrix()), kInf);
    const double deriv_terms = c.deriv_series(ddiff);
    const double sqrt_eg = std::sqrt(eg_clamped);
    const double fq_sigma = qfi(t_sigma_star);
    const double fq_rho = qfi(t_rho);

    const double rhs = fq_sigma + 16.0 * (c.f1 + c.f2 + c.f3 + c.f4) * sqrt_eg + deriv_terms;
    // Sharper power-series variant; rhs dominates it termwise for eg <= 1.
    double rhs_series = fq_sigma + deriv_terms;
    double power = 1.0;
    const double fs[] = {c.f1, c.f2, c.f3, c.f4};
    for (int m = 1; m <= 4; ++m) {
        power *= 2.0 * sqrt_eg;
        rhs_series += fs[m - 1] * power;
    }
    const double t_dist = trace_distance(t_rho.rho, t_sigma_star.rho);
    return make_report("qfi-entanglement", fq_rho, rhs,
                       {{"eg", eg_clamped},
                        {"sqrt_eg", sqrt_eg},
                        {"fq_sigma_star", fq_sigma},
                        {"rhs_power_series", rhs_series},
                        {"trace_dist", t_dist},
                        {"two_sqrt_eg", 2.0 * sqrt_eg},
                        {"ddiff_inf", ddiff}});
}

BoundReport sld_entanglement_bound(const TangentState& t_rho, const TangentState& t_sigma_star,
                                   double h_norm_inf, double eg, double full_rank_floor) {
    if (t_rho.dim() != t_sigma_star.dim()) {
        throw std::invalid_argument("sld_entanglement_bound: dimension mismatch");
    }
    if (t_rho.rho.lambda_min() < full_rank_floor ||
        t_sigma_star.rho.lambda_min() < full_rank_floor) {
        throw std::domain_error("sld_entanglement_bound: states must be full rank");
    }
    const double nu = nu_factor(t_rho.rho, t_sigma_star.rho);
    const Eigen::MatrixXcd l_diff =
        sld_spectral(t_rho).l.matrix() - sld_spectral(t_sigma_star).l.matrix();
    const double lhs = schatten_norm(l_diff, kInf);
    const double sqrt_eg = std::sqrt(std::clamp(eg, 0.0, 1.0));
    return make_report("sld-entanglement", lhs, 12.0 * nu * h_norm_inf * sqrt_eg,
                       {{"nu", nu}, {"h_inf", h_norm_inf}, {"eg", eg}});
}

ScalingBoundParams ScalingBoundParams::make(double alpha_c, double alpha_q,
                                            const KLocalHamiltonian& h) {
    ScalingBoundParams params;
    params.alpha_c = alpha_c;
    params.alpha_q = alpha_q;
    params.alpha_cq = alpha_c + alpha_q;
    const double max_term = h.max_term_norm();
    params.alpha_qq = 208.0 * max_term * max_term;
    params.k = h.locality();
    params.n_sites = h.n_sites();
    return params;
}

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    double result = 1.0;
    for (int i = 1; i <= k; ++i) {
        result *= static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return result;
}

}  // namespace

std::vector<BoundReport> scaling_bound(const TangentState& t_rho, const KLocalHamiltonian& h,
                                       const ScalingBoundParams& params, double eg, double nu,
                                       double fq_sigma_star) {
    const HermitianOperator h_global = assemble_klocal(h);
    if (h_global.dim() != t_rho.dim()) {
        throw std::invalid_argument("scaling_bound: dimension mismatch");
    }
    const Eigen::MatrixXcd commutator_gap =
        t_rho.drho.matrix() +
        Complex(0.0, 1.0) * (h_global.matrix() * t_rho.rho.matrix() -
                             t_rho.rho.matrix() * h_global.matrix());
    if (schatten_norm(commutator_gap, 1.0) > 1e-9) {
        throw std::domain_error("scaling_bound: tangent is not unitary for this Hamiltonian");
    }
    const double max_term = h.max_term_norm();
    if (std::abs(params.alpha_cq - (params.alpha_c + params.alpha_q)) >
        1e-9 * std::max(1.0, std::abs(params.alpha_cq))) {
        throw std::invalid_argument("scaling_bound: alpha_cq must equal alpha_c + alpha_q");
    }
    if (std::abs(params.alpha_qq - 208.0 * max_term * max_term) >
        1e-9 * std::max(1.0, params.alpha_qq)) {
        throw std::invalid_argument(
            "scaling_bound: alpha_qq must equal 208 * (max term norm)^2");
    }

    const double h_inf = schatten_norm(h_global, kInf);
    const double binom = binomial(params.n_sites, params.k);
    const double sqrt_eg = std::sqrt(std::clamp(eg, 0.0, 1.0));
    const double lhs = qfi(t_rho);
    const double n = static_cast<double>(params.n_sites);

    std::map<std::string, double> context = {
        {"eg", eg},           {"nu", nu},
        {"h_inf", h_inf},     {"binom", binom},
        {"n_sites", n},       {"k", static_cast<double>(params.k)},
        {"alpha_cq", params.alpha_cq}, {"alpha_qq", params.alpha_qq},
        {"fq_sigma_star", fq_sigma_star}};

    const double entangled_term = 208.0 * nu * nu * h_inf * h_inf * sqrt_eg;
    std::vector<BoundReport> reports;
    reports.push_back(
        make_report("scaling-v1", lhs, fq_sigma_star + entangled_term, context));
    reports.push_back(
        make_report("scaling-v2", lhs, params.alpha_cq * n + entangled_term, context));
    reports.push_back(make_report(
        "scaling-v3", lhs,
        params.alpha_cq * n + params.alpha_qq * binom * binom * nu * nu * sqrt_eg, context));
    reports.push_back(
        make_report("klocal-norm", h_inf, binom * max_term, {{"max_term_norm", max_term}}));
    return reports;
}

std::vector<TypicalityRow> typicality_sweep(const std::vector<int>& n_qubits, int samples,
                                            std::uint64_t seed, int restarts) {
    if (samples < 0) {
        throw std::invalid_argument("typicality_sweep: samples must be >= 0");
    }
    std::vector<TypicalityRow> rows;
    rows.reserve(n_qubits.size());
    for (int n : n_qubits) {
        if (n < 1 || n > 10) {
            throw std::invalid_argument("typicality_sweep: n_qubits must lie in [1, 10]");
        }
        const long dim = 1L << n;
        std::vector<double> values(static_cast<std::size_t>(samples));
        parallel_for(samples, [&](long i) {
            const std::uint64_t s =
                derive_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i));
            const Eigen::VectorXcd psi = sample_haar_vector(static_cast<int>(dim), s);
            values[static_cast<std::size_t>(i)] =
                eg_pure(psi, n, 2, restarts, derive_seed(s, 0xE9, 0)).eg;
        });
        std::sort(values.begin(), values.end());
        TypicalityRow row;
        row.n_qubits = n;
        row.samples = samples;
        if (samples > 0) {
            row.mean_eg = std::accumulate(values.begin(), values.end(), 0.0) / samples;
            row.p05_eg = values[static_cast<std::size_t>(0.05 * (samples - 1))];
            row.min_eg = values.front();
            row.max_eg = values.back();
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qfib
