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
 * Symmetric logarithmic derivative solvers, quantum and classical Fisher
 * information, Cramer-Rao bounds, and the extended-convexity cross-check.
 *
 * The SLD L is the Hermitian solution of drho = (L rho + rho L)/2. Two
 * routes are provided: the eigenbasis solve L_ij = 2 drho_ij/(l_i + l_j)
 * and Gauss-Legendre quadrature of 2 * integral e^{-s rho} drho e^{-s rho}
 * ds over [0, s_max] (the factor 2 makes the defining equation hold
 * exactly; the residual check enforces it). Matrix elements whose
 * eigenvalue sum falls below cutoff * l_max are set to zero (support
 * convention); on rank-1 states this reproduces the pure-state formula
 * 4 (<dpsi|dpsi> - |<psi|dpsi>|^2).
 */

#pragma once

#include <cstdint>
#include <vector>

#include "qfib/report.hpp"
#include "qfib/states.hpp"

namespace qfib {

/// Relative eigenvalue-sum threshold below which SLD matrix elements are
/// zeroed (kernel-kernel block of rank-deficient states).
inline constexpr double kSldCutoff = 1e-10;

struct SldResult {
    HermitianOperator l;
    int support_dim = 0;   ///< eigenvalues above cutoff * l_max
    double residual = 0.0; ///< ||drho - (L rho + rho L)/2||_1
};

/// Eigenbasis SLD solve. Exact (residual <= 1e-9 * dim) on full-rank input.
SldResult sld_spectral(const TangentState& t, double cutoff = kSldCutoff);

/// Quadrature SLD. Requires lambda_min(rho) > 0; the truncation error is
/// bounded by ||drho||_inf e^{-2 s_max lambda_min} / lambda_min.
SldResult sld_integral(const TangentState& t, double s_max, int nodes);

/// s_max such that the truncation error estimate equals
/// tail_eps * ||drho||_inf.
double sld_integral_s_max(const TangentState& t, double tail_eps = 1e-10);

/// Node count for plain Gauss-Legendre on [0, s_max] sized to resolve the
/// fastest decay rate 2 * lambda_max.
int sld_integral_nodes(const TangentState& t, double s_max);

/// Quadrature SLD with both parameters chosen automatically.
SldResult sld_integral_auto(const TangentState& t, double tail_eps = 1e-10);

/// Quantum Fisher information Tr[rho L^2] with the default-cutoff SLD.
double qfi(const TangentState& t);

/// Independent rank-1 oracle 4 (<dpsi|dpsi> - |<psi|dpsi>|^2).
/// Requires psi normalized.
double qfi_pure_oracle(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& dpsi);

/// Discrete classical Fisher information sum dp_i^2 / p_i. Outcomes with
/// p_i <= 1e-15 are dropped when |dp_i| <= 1e-12 (removable singularity)
/// and rejected otherwise.
double classical_fi(const Eigen::VectorXd& p, const Eigen::VectorXd& dp);

/// Classical Fisher information of the POVM statistics p_i = Tr[rho Pi_i],
/// dp_i = Tr[drho Pi_i]; never exceeds qfi(t).
double povm_cfi(const TangentState& t, const Povm& m);

struct CrbResult {
    double fisher_value = 0.0;
    long repetitions = 1;
    double delta_x_lower = 0.0;  ///< (M F)^{-1/2}; +inf when F == 0.
};

CrbResult cramer_rao(double fisher_value, long repetitions);

struct WeightedTangent {
    double weight;
    TangentState state;
};

/// Mixture bound: F^Q of the mixed tangent (sum of dp_a rho_a + p_a drho_a)
/// never exceeds the classical term F^C({p_a}) plus the average component
/// QFI. dweights must sum to zero.
BoundReport extended_convexity_gap(const std::vector<WeightedTangent>& components,
                                   const Eigen::VectorXd& dweights);

/// Product rule tangent: d(rho1 x rho2) = drho1 x rho2 + rho1 x drho2.
TangentState tensor_tangent(const TangentState& t1, const TangentState& t2);

/// |F^Q(rho1 x rho2) - F^Q(rho1) - F^Q(rho2)| against the additivity
/// contract threshold 1e-8.
BoundReport qfi_additivity_check(const TangentState& t1, const TangentState& t2);

}  // namespace qfib
