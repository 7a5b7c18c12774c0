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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "qfib/fisher.hpp"

using namespace qfib;
using qtest::diag_density;
using qtest::diag_matrix;
using qtest::max_abs_diff;
using Complex = std::complex<double>;

namespace {

Eigen::MatrixXcd off_diag(double v) {
    Eigen::MatrixXcd m(2, 2);
    m << 0.0, v, v, 0.0;
    return m;
}

TangentState random_full_rank_tangent(int dim, double floor_value, std::uint64_t seed) {
    const DensityMatrix rho = sample_full_rank_density(dim, floor_value, seed);
    return sample_tangent(rho, 1.0, mix64(seed ^ 0x7A9E77ULL));
}

}  // namespace

TEST_CASE("sld eigenbasis solve on closed-form cases", "[fisher]") {
    SECTION("maximally mixed qubit: L = 2 drho") {
        const TangentState t{DensityMatrix::maximally_mixed(2),
                             HermitianOperator(off_diag(0.5))};
        const SldResult sld = sld_spectral(t);
        REQUIRE(max_abs_diff(sld.l.matrix(), off_diag(1.0)) < 1e-12);
        REQUIRE(sld.support_dim == 2);
        REQUIRE(sld.residual < 1e-12);
    }
    SECTION("diagonal state with off-diagonal derivative") {
        const TangentState t{diag_density({0.75, 0.25}), HermitianOperator(off_diag(0.25))};
        REQUIRE(max_abs_diff(sld_spectral(t).l.matrix(), off_diag(0.5)) < 1e-12);
    }
    SECTION("zero derivative") {
        const TangentState t{diag_density({0.75, 0.25}), HermitianOperator::zero(2)};
        REQUIRE(schatten_norm(sld_spectral(t).l, kInf) < 1e-14);
    }
    SECTION("cutoff must be positive") {
        const TangentState t{diag_density({0.75, 0.25}), HermitianOperator::zero(2)};
        REQUIRE_THROWS_AS(sld_spectral(t, 0.0), std::invalid_argument);
    }
}

TEST_CASE("sld defining-equation residual on random full-rank tangents", "[fisher]") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int dim = 2 + static_cast<int>(seed % 7);
        const TangentState t = random_full_rank_tangent(dim, 0.02, mix64(10000 + seed));
        REQUIRE(sld_spectral(t).residual <= 1e-9 * dim);
    }
}

TEST_CASE("sld quadrature route", "[fisher]") {
    SECTION("matches the eigenbasis solve on the mixed-qubit case") {
        const TangentState t{DensityMatrix::maximally_mixed(2),
                             HermitianOperator(off_diag(0.5))};
        const SldResult viaint = sld_integral(t, 40.0, 128);
        REQUIRE(max_abs_diff(viaint.l.matrix(), sld_spectral(t).l.matrix()) < 1e-8);
    }
    SECTION("zero derivative integrates to zero") {
        const TangentState t{diag_density({0.8, 0.2}), HermitianOperator::zero(2)};
        REQUIRE(schatten_norm(sld_integral(t, 10.0, 64).l, kInf) < 1e-14);
    }
    SECTION("singular state is rejected") {
        Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(2);
        e0(0) = 1.0;
        const TangentState t{DensityMatrix::pure(e0), HermitianOperator(off_diag(0.3))};
        REQUIRE_THROWS_AS(sld_integral(t, 10.0, 64), std::domain_error);
        REQUIRE_THROWS_AS(sld_integral_auto(t), std::domain_error);
    }
    SECTION("truncation error follows the tail estimate") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const TangentState t = random_full_rank_tangent(3, 0.05, mix64(400 + seed));
            const double lmin = t.rho.lambda_min();
            const double s_max = 2.0 / lmin;  // deliberately short
            // Generous node count isolates the truncation error.
            const SldResult truncated = sld_integral(t, s_max, 1024);
            const double gap = max_abs_diff(truncated.l.matrix(), sld_spectral(t).l.matrix());
            const double tail_bound =
                schatten_norm(t.drho, kInf) * std::exp(-2.0 * s_max * lmin) / lmin;
            REQUIRE(gap <= tail_bound * 1.05 + 1e-12);
        }
    }
    SECTION("auto-sized quadrature agrees with the eigenbasis solve") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const int dim = 2 + static_cast<int>(seed % 7);
            const TangentState t = random_full_rank_tangent(dim, 0.05, mix64(52000 + seed));
            const SldResult viaint = sld_integral_auto(t);
            REQUIRE(max_abs_diff(viaint.l.matrix(), sld_spectral(t).l.matrix()) < 1e-7);
        }
    }
}

TEST_CASE("qfi closed forms", "[fisher]") {
    const TangentState t{diag_density({0.75, 0.25}), HermitianOperator(off_diag(0.25))};
    REQUIRE(qfi(t) == Catch::Approx(0.25).margin(1e-12));

    const TangentState zero{diag_density({0.75, 0.25}), HermitianOperator::zero(2)};
    REQUIRE(qfi(zero) == Catch::Approx(0.0).margin(1e-14));

    // Bloch oracle: transverse Bloch vector of length p rotating about z.
    for (double p : {0.2, 0.5, 0.8}) {
        Eigen::MatrixXcd rho = 0.5 * (Eigen::MatrixXcd::Identity(2, 2) +
                                      p * Eigen::MatrixXcd(pauli_x()));
        const TangentState rotated = phase_channel(
            DensityMatrix(HermitianOperator(std::move(rho))),
            HermitianOperator(Eigen::MatrixXcd(0.5 * pauli_z())), 0.0);
        REQUIRE(qfi(rotated) == Catch::Approx(p * p).margin(1e-10));
    }
}

TEST_CASE("qfi is invariant along the phase orbit", "[fisher]") {
    const DensityMatrix rho0 = sample_mixed_ginibre(3, 3, 91);
    const HermitianOperator h = qtest::random_hermitian(3, 92);
    const double reference = qfi(phase_channel(rho0, h, 0.0));
    for (double x : {0.2, 0.9, 2.5}) {
        REQUIRE(qfi(phase_channel(rho0, h, x)) == Catch::Approx(reference).margin(1e-8));
    }
}

TEST_CASE("pure-state oracle", "[fisher]") {
    Eigen::VectorXcd plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);

    SECTION("pure gauge direction carries no information") {
        const Eigen::VectorXcd dpsi = Complex(0.0, 0.7) * plus;
        REQUIRE(qfi_pure_oracle(plus, dpsi) == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("plus state under the half-z generator") {
        const Eigen::MatrixXcd h = 0.5 * pauli_z();
        const Eigen::VectorXcd dpsi = Complex(0.0, -1.0) * (h * plus);
        REQUIRE(qfi_pure_oracle(plus, dpsi) == Catch::Approx(1.0).margin(1e-12));
    }
    SECTION("ghz states reach the Heisenberg value") {
        for (int n = 2; n <= 6; ++n) {
            const Eigen::VectorXcd psi = ghz_vector(n);
            const HermitianOperator half_z{Eigen::MatrixXcd(0.5 * pauli_z())};
            std::vector<KLocalTerm> terms;
            for (int j = 0; j < n; ++j) {
                terms.push_back({{j}, half_z});
            }
            const Eigen::MatrixXcd h =
                assemble_klocal(KLocalHamiltonian(n, 2, 1, terms)).matrix();
            const Eigen::VectorXcd dpsi = Complex(0.0, -1.0) * (h * psi);
            REQUIRE(qfi_pure_oracle(psi, dpsi) ==
                    Catch::Approx(static_cast<double>(n) * n).margin(1e-10));
        }
    }
    SECTION("normalization is enforced") {
        REQUIRE_THROWS_AS(qfi_pure_oracle(2.0 * plus, plus), std::invalid_argument);
    }
}

TEST_CASE("rank-1 tangents match the pure-state oracle", "[fisher]") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int dim = 2 + static_cast<int>(seed % 7);
        const Eigen::VectorXcd psi = sample_haar_vector(dim, mix64(61000 + seed));
        Eigen::VectorXcd dpsi = sample_haar_vector(dim, mix64(62000 + seed));
        // Remove the real part of <psi|dpsi> so the projector derivative is
        // traceless.
        const Complex overlap = psi.adjoint() * dpsi;
        dpsi -= overlap.real() * psi;

        Eigen::MatrixXcd drho = dpsi * psi.adjoint() + psi * dpsi.adjoint();
        drho = 0.5 * (drho + drho.adjoint()).eval();
        const TangentState t{DensityMatrix::pure(psi), HermitianOperator(std::move(drho))};
        REQUIRE(qfi(t) == Catch::Approx(qfi_pure_oracle(psi, dpsi)).margin(1e-8));
    }
}

TEST_CASE("classical fisher information", "[fisher]") {
    Eigen::VectorXd p(2);
    Eigen::VectorXd dp(2);
    p << 0.5, 0.5;
    dp << 1.0, -1.0;
    REQUIRE(classical_fi(p, dp) == Catch::Approx(4.0).margin(1e-12));

    dp.setZero();
    REQUIRE(classical_fi(p, dp) == 0.0);

    const int d = 6;
    const double eps = 1e-3;
    Eigen::VectorXd uniform = Eigen::VectorXd::Constant(d, 1.0 / d);
    Eigen::VectorXd bump = Eigen::VectorXd::Zero(d);
    bump(0) = eps;
    bump(1) = -eps;
    REQUIRE(classical_fi(uniform, bump) == Catch::Approx(2.0 * d * eps * eps).epsilon(1e-12));

    SECTION("support violations and malformed inputs") {
        Eigen::VectorXd with_zero(3);
        Eigen::VectorXd grad(3);
        with_zero << 0.0, 0.5, 0.5;
        grad << 0.1, -0.05, -0.05;
        REQUIRE_THROWS_AS(classical_fi(with_zero, grad), std::domain_error);

        grad << 0.0, 0.1, -0.1;
        REQUIRE_NOTHROW(classical_fi(with_zero, grad));

        Eigen::VectorXd not_normalized(2);
        not_normalized << 0.7, 0.7;
        Eigen::VectorXd dp2(2);
        dp2 << 0.1, -0.1;
        REQUIRE_THROWS_AS(classical_fi(not_normalized, dp2), std::domain_error);
    }
}

TEST_CASE("povm statistics never beat the quantum bound", "[fisher]") {
    SECTION("single-outcome measurement carries nothing") {
        const TangentState t = random_full_rank_tangent(3, 0.05, 1234);
        const Povm trivial{{HermitianOperator::identity(3)}};
        REQUIRE(povm_cfi(t, trivial) == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("the sld eigenbasis attains the qfi") {
        const TangentState t{diag_density({0.75, 0.25}), HermitianOperator(off_diag(0.25))};
        const SpectralDecomposition sd = spectral(sld_spectral(t).l);
        std::vector<HermitianOperator> effects;
        for (int i = 0; i < 2; ++i) {
            const Eigen::VectorXcd v = sd.eigenvectors.col(i);
            Eigen::MatrixXcd proj = v * v.adjoint();
            proj = 0.5 * (proj + proj.adjoint()).eval();
            effects.emplace_back(std::move(proj));
        }
        REQUIRE(povm_cfi(t, Povm(std::move(effects))) ==
                Catch::Approx(qfi(t)).margin(1e-8));
    }
    SECTION("random projective measurements sit below the qfi") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const int dim = 2 + static_cast<int>(seed % 5);
            const TangentState t = random_full_rank_tangent(dim, 0.02, mix64(71000 + seed));
            const Povm povm = sample_projective_povm(dim, mix64(72000 + seed));
            REQUIRE(povm_cfi(t, povm) <= qfi(t) + 1e-9);
        }
    }
}

TEST_CASE("cramer-rao arithmetic", "[fisher]") {
    REQUIRE(cramer_rao(4.0, 25).delta_x_lower == Catch::Approx(0.1).margin(1e-15));
    REQUIRE(cramer_rao(1.0, 1).delta_x_lower == Catch::Approx(1.0).margin(1e-15));
    REQUIRE(std::isinf(cramer_rao(0.0, 10).delta_x_lower));
    REQUIRE_THROWS_AS(cramer_rao(-1.0, 1), std::domain_error);
    REQUIRE_THROWS_AS(cramer_rao(1.0, 0), std::invalid_argument);

    const CrbResult r = cramer_rao(2.5, 40);
    REQUIRE(r.delta_x_lower ==
            Catch::Approx(1.0 / std::sqrt(40.0 * 2.5)).margin(1e-15));
}

TEST_CASE("extended convexity of the qfi", "[fisher]") {
    SECTION("single component collapses to equality") {
        const TangentState t = random_full_rank_tangent(2, 0.05, 31);
        Eigen::VectorXd dw(1);
        dw << 0.0;
        const BoundReport report = extended_convexity_gap({{1.0, t}}, dw);
        REQUIRE(report.satisfied);
        REQUIRE(report.lhs == Catch::Approx(report.rhs).margin(1e-9));
    }
    SECTION("two identical components with static weights") {
        const TangentState t = random_full_rank_tangent(2, 0.05, 32);
        Eigen::VectorXd dw(2);
        dw << 0.0, 0.0;
        const BoundReport report = extended_convexity_gap({{0.5, t}, {0.5, t}}, dw);
        REQUIRE(report.satisfied);
        REQUIRE(report.lhs == Catch::Approx(qfi(t)).margin(1e-9));
        REQUIRE(report.rhs == Catch::Approx(qfi(t)).margin(1e-9));
    }
    SECTION("random two-component mixtures") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            Rng rng(mix64(81000 + seed));
            const double w = 0.2 + 0.6 * rng.uniform();
            const double c = rng.uniform() - 0.5;
            Eigen::VectorXd dw(2);
            dw << c, -c;
            const BoundReport report = extended_convexity_gap(
                {{w, random_full_rank_tangent(2, 0.02, mix64(82000 + seed))},
                 {1.0 - w, random_full_rank_tangent(2, 0.02, mix64(83000 + seed))}},
                dw);
            REQUIRE(report.satisfied);
        }
    }
    SECTION("weight validation") {
        const TangentState t = random_full_rank_tangent(2, 0.05, 33);
        Eigen::VectorXd dw(2);
        dw << 0.1, -0.1;
        REQUIRE_THROWS_AS(extended_convexity_gap({{0.9, t}, {0.3, t}}, dw),
                          std::invalid_argument);
    }
}

TEST_CASE("qfi additivity over tensor products", "[fisher]") {
    const TangentState t1 = random_full_rank_tangent(2, 0.05, 41);

    SECTION("second factor static") {
        const DensityMatrix rho2 = sample_full_rank_density(2, 0.05, 42);
        const TangentState t2{rho2, HermitianOperator::zero(2)};
        const BoundReport report = qfi_additivity_check(t1, t2);
        REQUIRE(report.satisfied);
        REQUIRE(report.context.at("qfi_product") ==
                Catch::Approx(qfi(t1)).margin(1e-9));
    }
    SECTION("two copies of the closed-form qubit case") {
        const TangentState t{diag_density({0.75, 0.25}), HermitianOperator(off_diag(0.25))};
        REQUIRE(qfi(tensor_tangent(t, t)) == Catch::Approx(0.5).margin(1e-9));
    }
    SECTION("random qubit pairs") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const BoundReport report = qfi_additivity_check(
                random_full_rank_tangent(2, 0.02, mix64(91000 + seed)),
                random_full_rank_tangent(2, 0.02, mix64(92000 + seed)));
            REQUIRE(report.satisfied);
        }
    }
}
