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
 * Evaluators for the operator-norm, SLD, and QFI continuity inequalities,
 * each returning a structured BoundReport, plus the seeded batch verifier.
 *
 * All right-hand sides are computed exactly as the closed forms state,
 * including the conditioning factor nu = lambda_min(rho)^-4 *
 * lambda_min(sigma)^-4 and the doubled first derivative-norm term in the
 * quadratic continuity coefficient; discrepancies are surfaced as slack,
 * never patched. Evaluators refuse states with lambda_min below the
 * full-rank floor (default 1e-8) because the nu-scale blow-up makes the
 * report meaningless there.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qfib/fisher.hpp"
#include "qfib/report.hpp"
#include "qfib/states.hpp"

namespace qfib {

/// Evaluators refuse lambda_min below this floor.
inline constexpr double kFullRankFloor = 1e-8;

enum class ContinuityVariant { kTight, kLoose };

/// Conditioning factor lambda_min(rho)^-4 lambda_min(sigma)^-4.
double nu_factor(const DensityMatrix& rho, const DensityMatrix& sigma);

/// ||e^{-s rho} - e^{-s sigma}||_inf against the eigenvalue difference
/// quotient of the smallest eigenvalues times ||rho - sigma||_1. The
/// removable singularity at equal smallest eigenvalues is evaluated by its
/// limit s e^{-s lambda}.
BoundReport exp_diff_bound(const DensityMatrix& rho, const DensityMatrix& sigma, double s,
                           double full_rank_floor = kFullRankFloor);

/// ||L||_inf <= ||drho||_inf / lambda_min(rho).
BoundReport sld_norm_bound(const TangentState& t, double full_rank_floor = kFullRankFloor);

/// Extended SLD continuity: ||L_rho - L_sigma||_inf against the tight
/// eigenvalue form or the loose nu form. Closeness of the SLDs needs both
/// close states and close derivatives.
BoundReport sld_continuity_bound(const TangentState& t_rho, const TangentState& t_sigma,
                                 ContinuityVariant variant,
                                 double full_rank_floor = kFullRankFloor);

/// Coefficients of the quartic QFI continuity polynomial; all infinity
/// norms, homogeneous of degree two in the derivatives (g1 of degree one).
struct ContinuityCoefficients {
    double f1 = 0.0;
    double f2 = 0.0;
    double f3 = 0.0;
    double f4 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;

    double state_series(double trace_dist) const;   ///< sum f_m t^m
    double deriv_series(double deriv_dist) const;   ///< sum g_n d^n
};

ContinuityCoefficients continuity_coefficients(const TangentState& t_rho,
                                               const TangentState& t_sigma,
                                               double full_rank_floor = kFullRankFloor);

/// Extended QFI continuity: |F^Q(rho) - F^Q(sigma)| against
/// sum_m f_m ||rho-sigma||_1^m + sum_n g_n ||drho-dsigma||_inf^n.
/// The context also stores the intermediate SLD-stage rhs so the two-stage
/// chain can be audited term by term.
BoundReport qfi_continuity_bound(const TangentState& t_rho, const TangentState& t_sigma,
                                 double full_rank_floor = kFullRankFloor);

/// Unitary-scenario SLD continuity at parameter x: both tangents come from
/// the phase channel under the same H, and the 1-norm distance at x equals
/// the distance of the initial states (recorded in the context).
BoundReport unitary_sld_bound(const DensityMatrix& rho0, const DensityMatrix& sigma0,
                              const HermitianOperator& h, double x, ContinuityVariant variant,
                              double full_rank_floor = kFullRankFloor);

struct BoundCatalogEntry {
    std::string id;
    std::string description;
};

/// All batch-verifiable bound ids with one-line descriptions.
const std::vector<BoundCatalogEntry>& bound_catalog();

/// Ids exercised by the default bound-suite run.
std::vector<std::string> default_bound_suite_ids();

/// Ids exercised by the unitary-suite run.
std::vector<std::string> unitary_suite_ids();

struct BatchConfig {
    std::uint64_t seed = 0;
    std::vector<int> dims;
    long samples = 0;
    double lambda_floor = 1e-2;      ///< ensemble smallest-eigenvalue floor
    std::vector<std::string> bound_ids;
    double full_rank_floor = kFullRankFloor;
    int threads = 0;                 ///< 0: QFIBOUNDS_THREADS or hardware
    std::string experiment = "bound-suite";
};

/// Samples seeded state/tangent ensembles and evaluates the configured
/// bound ids. Rows are ordered by (dim, sample, bound) regardless of
/// scheduling; per-sample seeds derive from the master seed and sample
/// index. Throws on unknown bound ids.
std::vector<ReportRow> batch_verify(const BatchConfig& config);

}  // namespace qfib
