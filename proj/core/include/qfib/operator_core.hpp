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
 * Hermitian-operator arithmetic: validated Hermitian matrices, spectral
 * decompositions, Schatten p-norms, and spectral matrix exponentials.
 * Everything here is a pure function of its inputs and safe to share
 * across threads.
 */

#pragma once

#include <Eigen/Dense>
#include <limits>

namespace qfib {

/// Absolute entrywise tolerance for accepting a matrix as Hermitian.
/// Inputs beyond it are rejected, not symmetrized.
inline constexpr double kHermitianTol = 1e-12;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A finite-dimensional Hermitian matrix. Construction validates
/// A == A^dagger within kHermitianTol (max entry deviation) and dim >= 1.
class HermitianOperator {
  public:
    explicit HermitianOperator(Eigen::MatrixXcd entries);

    static HermitianOperator identity(int dim);
    static HermitianOperator zero(int dim);

    int dim() const noexcept { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }

  private:
    Eigen::MatrixXcd entries_;
};

/// Eigensystem of a Hermitian operator: eigenvalues ascending,
/// eigenvector columns orthonormal. lambda_min is eigenvalues(0).
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;
};

SpectralDecomposition spectral(const HermitianOperator& a);

/// Schatten p-norm (Tr|A|^p)^(1/p) for p in [1, inf]. Hermitian inputs go
/// through the eigenvalue path; general matrices through singular values.
/// p < 1 raises std::domain_error. Pass kInf (or any infinity) for p = inf.
double schatten_norm(const HermitianOperator& a, double p);
double schatten_norm(const Eigen::MatrixXcd& a, double p);

/// Smallest eigenvalue.
double lambda_min(const HermitianOperator& a);

/// e^{tA} via the spectral decomposition; Hermitian positive definite.
HermitianOperator herm_exp(const HermitianOperator& a, double t = 1.0);

/// Positive-semidefinite square root through the spectral decomposition,
/// with eigenvalues below zero clamped to zero.
Eigen::MatrixXcd psd_sqrt(const HermitianOperator& a);

/// 1-norm residual of the exponential-difference identity
///   e^A - e^B = integral over [0,1] of e^{tau A} (A - B) e^{(1-tau) B}
/// under Gauss-Legendre quadrature with `nodes` points. Converges to 0 as
/// the node count grows; a test utility exposed for convergence studies.
double exp_identity_residual(const HermitianOperator& a, const HermitianOperator& b,
                             int nodes = 64);

}  // namespace qfib
