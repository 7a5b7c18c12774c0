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

/**
 * @file
 * Geometric measure of entanglement and the entanglement-vs-QFI bounds.
 *
 * E_G(rho) = 1 - max over separable sigma of F^2(rho, sigma), the
 * maximization running over convex mixtures of fully product pure states.
 * For pure states the maximum is attained on a product pure state and is
 * found by alternating single-site power iteration. For mixed states a
 * see-saw ascent over (weights, per-site factors) returns a feasible
 * separable state, so the reported E_G is an upper bound (1 - F^2 of a
 * feasible point); the bounds evaluated with that feasible state remain
 * valid because the continuity chain holds for any full-rank pair.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "qfib/bounds.hpp"
#include "qfib/report.hpp"
#include "qfib/states.hpp"

namespace qfib {

/// Convex combination of fully product pure states: weights on the
/// simplex, one unit vector of length local_dim per (component, site).
class SeparableAnsatz {
  public:
    SeparableAnsatz(int n_sites, int local_dim, Eigen::VectorXd weights,
                    std::vector<std::vector<Eigen::VectorXcd>> factors);

    int n_sites() const noexcept { return n_sites_; }
    int local_dim() const noexcept { return local_dim_; }
    int n_components() const noexcept { return static_cast<int>(weights_.size()); }
    const Eigen::VectorXd& weights() const noexcept { return weights_; }
    const std::vector<std::vector<Eigen::VectorXcd>>& factors() const noexcept {
        return factors_;
    }

    /// Product vector of one component (big-endian site order).
    Eigen::VectorXcd component_vector(int a) const;

    /// The represented density matrix sum_a q_a |prod_a><prod_a|.
    DensityMatrix assemble() const;

    /// (1-gamma) sigma + gamma I/d, realized inside the separable set by
    /// appending the computational product basis with weight gamma/d each.
    SeparableAnsatz mixed_with_identity(double gamma) const;

  private:
    int n_sites_;
    int local_dim_;
    Eigen::VectorXd weights_;
    std::vector<std::vector<Eigen::VectorXcd>> factors_;
};

struct EgResult {
    double eg = 0.0;
    SeparableAnsatz best_ansatz;
    double max_fidelity_sq = 0.0;
    int restarts_used = 0;
    bool converged = false;
};

/// Geometric entanglement of a pure state by alternating single-site power
/// iteration (fix all sites but one, update that site to the normalized
/// partial inner product), best over seeded restarts. Convergence when the
/// overlap changes by less than 1e-12 between sweeps; at most 500 sweeps.
EgResult eg_pure(const Eigen::VectorXcd& psi, int n_sites, int local_dim, int restarts = 32,
                 std::uint64_t seed = 0);

/// Independent two-qubit oracle: exhaustive grid over the Bloch angles
/// (theta, phi) of both sites, `grid` points per angle. Upper-bounds the
/// true E_G within the angular resolution.
double eg_brute(const Eigen::VectorXcd& psi, int grid);

struct SeparableSearchResult {
    SeparableAnsatz ansatz;
    double fidelity = 0.0;
    std::vector<double> fidelity_trace;  ///< best restart, one entry per sweep
    int restarts_used = 0;
    bool converged = false;
};

/// See-saw fidelity ascent over separable mixtures: projected-gradient
/// weight steps and per-site factor updates against the fidelity gradient,
/// each accepted only when the exact fidelity improves (monotone by
/// construction). Returns a feasible separable state and its fidelity, a
/// certified lower bound on the separable fidelity maximum; 1 - F^2 is an
/// upper bound on E_G. n_components < 1 selects the default 2 * dim.
SeparableSearchResult closest_separable(const DensityMatrix& rho, int n_sites, int local_dim,
                                        int n_components = -1, int restarts = 8,
                                        std::uint64_t seed = 0);

/// ||rho - sigma_ansatz||_1 <= 2 sqrt(1 - F^2(rho, sigma_ansatz)); the
/// trace-distance route to the entanglement estimate for this ansatz.
BoundReport eg_trace_bound_check(const DensityMatrix& rho, const SeparableAnsatz& ansatz);

/// QFI-vs-entanglement bound: F^Q(rho) against
/// F^Q(sigma*) + 16 (sum_m f_m) sqrt(E_G) + sum_n g_n ||drho - dsigma||^n.
/// The context stores the sharper power-series variant, which the reported
/// rhs dominates.
BoundReport eg_qfi_bound(const TangentState& t_rho, const TangentState& t_sigma_star, double eg,
                         double full_rank_floor = kFullRankFloor);

/// Unitary-scenario SLD-vs-entanglement bound:
/// ||L_rho - L_sigma*||_inf <= 12 nu* ||H||_inf sqrt(E_G).
BoundReport sld_entanglement_bound(const TangentState& t_rho, const TangentState& t_sigma_star,
                                   double h_norm_inf, double eg,
                                   double full_rank_floor = kFullRankFloor);

/// Scaling coefficients for the k-local bound family. alpha_cq must equal
/// alpha_c + alpha_q and alpha_qq must equal 208 * (max term norm)^2.
struct ScalingBoundParams {
    double alpha_c = 0.0;
    double alpha_q = 0.0;
    double alpha_cq = 0.0;
    double alpha_qq = 0.0;
    int k = 1;
    int n_sites = 1;

    static ScalingBoundParams make(double alpha_c, double alpha_q, const KLocalHamiltonian& h);
};

/// Evaluates the three k-local scaling variants plus the k-local norm
/// sub-check. The tangent must be unitary for the given Hamiltonian
/// (||drho + i[H, rho]||_1 <= 1e-9); eg, nu and F^Q(sigma*) come from the
/// prior pipeline stages.
std::vector<BoundReport> scaling_bound(const TangentState& t_rho, const KLocalHamiltonian& h,
                                       const ScalingBoundParams& params, double eg, double nu,
                                       double fq_sigma_star);

struct TypicalityRow {
    int n_qubits = 0;
    int samples = 0;
    double mean_eg = 0.0;
    double p05_eg = 0.0;
    double min_eg = 0.0;
    double max_eg = 0.0;
};

/// Mean and 5th-percentile E_G of Haar-random pure states per qubit count.
/// The increase of the mean with N is reported, not asserted.
std::vector<TypicalityRow> typicality_sweep(const std::vector<int>& n_qubits, int samples,
                                            std::uint64_t seed, int restarts = 8);

}  // namespace qfib
