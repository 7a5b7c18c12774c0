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
 * Density matrices, tangent (state, derivative) pairs, distance measures,
 * seeded random sampling, unitary phase channels, and k-local Hamiltonian
 * assembly.
 *
 * Conventions fixed here:
 *  - eigenvalues in [-1e-12, 0) are reported as 0; anything below -1e-12
 *    rejects the state;
 *  - qubit/qudit sites use big-endian ordering: site 0 is the most
 *    significant Kronecker factor;
 *  - sampled derivatives are tangent data at a point only; they are not
 *    constrained to keep the state positive along a finite trajectory.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "qfib/operator_core.hpp"
#include "qfib/report.hpp"

namespace qfib {

/// Eigenvalues of a density matrix may undershoot zero by at most this much.
inline constexpr double kPsdTol = 1e-12;
/// Trace-one and traceless-derivative tolerance.
inline constexpr double kTraceTol = 1e-12;

class DensityMatrix {
  public:
    /// Validates Tr = 1 within kTraceTol and eigenvalues >= -kPsdTol.
    explicit DensityMatrix(HermitianOperator op);

    /// Rank-1 projector |psi><psi| / <psi|psi>.
    static DensityMatrix pure(const Eigen::VectorXcd& psi);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const noexcept { return op_.dim(); }
    const HermitianOperator& op() const noexcept { return op_; }
    const Eigen::MatrixXcd& matrix() const noexcept { return op_.matrix(); }

    /// Smallest eigenvalue, clamped to 0 when within -kPsdTol of zero.
    double lambda_min() const noexcept { return lambda_min_; }

  private:
    HermitianOperator op_;
    double lambda_min_;
};

/// A density matrix paired with its parameter derivative at a point; the
/// universal input to SLD/QFI/bound operations. The derivative must be
/// Hermitian and traceless.
struct TangentState {
    DensityMatrix rho;
    HermitianOperator drho;

    TangentState(DensityMatrix rho_in, HermitianOperator drho_in);
    int dim() const noexcept { return rho.dim(); }
};

struct KLocalTerm {
    std::vector<int> sites;  ///< exactly k distinct sites, in range
    HermitianOperator op;    ///< acts on local_dim^k
};

/// Sum of terms each acting on at most k of n_sites qudits. Duplicate
/// subsets are allowed and summed.
class KLocalHamiltonian {
  public:
    KLocalHamiltonian(int n_sites, int local_dim, int k, std::vector<KLocalTerm> terms);

    int n_sites() const noexcept { return n_sites_; }
    int local_dim() const noexcept { return local_dim_; }
    int locality() const noexcept { return k_; }
    const std::vector<KLocalTerm>& terms() const noexcept { return terms_; }
    long global_dim() const noexcept;

    /// Largest term operator norm, max_j ||H_j||_inf.
    double max_term_norm() const;

  private:
    int n_sites_;
    int local_dim_;
    int k_;
    std::vector<KLocalTerm> terms_;
};

/// Positive-operator-valued measure: PSD effects summing to the identity.
class Povm {
  public:
    explicit Povm(std::vector<HermitianOperator> effects);

    int dim() const noexcept { return effects_.front().dim(); }
    const std::vector<HermitianOperator>& effects() const noexcept { return effects_; }

  private:
    std::vector<HermitianOperator> effects_;
};

/// Uhlmann fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)), in [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// 1-norm distance ||rho - sigma||_1, in [0, 2].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Certifies the two-sided fidelity / trace-norm relation
///   1 - F <= (1/2)||rho - sigma||_1 <= sqrt(1 - F^2).
/// lhs/rhs carry the upper stage; the lower stage is in the context and
/// `satisfied` covers both.
BoundReport fvg_check(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Haar-distributed unit vector (deterministic per seed).
Eigen::VectorXcd sample_haar_vector(int dim, std::uint64_t seed);

/// Rank-1 projector of a Haar-distributed unit vector.
DensityMatrix sample_pure_haar(int dim, std::uint64_t seed);

/// G G^dagger / Tr[G G^dagger] with G a dim x rank complex Gaussian matrix.
/// Full rank (lambda_min > 0 almost surely) when rank == dim.
DensityMatrix sample_mixed_ginibre(int dim, int rank, std::uint64_t seed);

/// Ginibre sample deterministically mixed toward I/dim until
/// lambda_min >= lambda_floor (target 1.05 * floor). Requires
/// lambda_floor < 1/dim.
DensityMatrix sample_full_rank_density(int dim, double lambda_floor, std::uint64_t seed);

/// Random traceless Hermitian derivative scale * (X - Tr[X] I/dim) with X
/// a Gaussian Hermitian matrix.
TangentState sample_tangent(const DensityMatrix& rho, double scale, std::uint64_t seed);

/// Haar-random orthonormal basis as rank-1 projective effects.
Povm sample_projective_povm(int dim, std::uint64_t seed);

/// Unitary phase channel rho = e^{-ixH} rho0 e^{ixH} with
/// drho = -i [H, rho]; the spectrum of rho equals the spectrum of rho0.
TangentState phase_channel(const DensityMatrix& rho0, const HermitianOperator& h, double x);

/// Global operator: sum of terms embedded by identity padding (big-endian
/// site order).
HermitianOperator assemble_klocal(const KLocalHamiltonian& h);

/// Kronecker product of density matrices, in list order.
DensityMatrix tensor_product(const std::vector<DensityMatrix>& states);

Eigen::MatrixXcd kronecker(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();

/// (|0...0> + |1...1>)/sqrt(2) on n qubits.
Eigen::VectorXcd ghz_vector(int n_qubits);

}  // namespace qfib
