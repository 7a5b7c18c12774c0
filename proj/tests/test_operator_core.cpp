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
#include "qfib/operator_core.hpp"
#include "qfib/quadrature.hpp"
#include "qfib/states.hpp"

using namespace qfib;
using qtest::diag_matrix;
using qtest::max_abs_diff;
using qtest::random_hermitian;
using Complex = std::complex<double>;

TEST_CASE("hermitian validation", "[operator-core]") {
    REQUIRE_THROWS_AS(HermitianOperator(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);
    REQUIRE_THROWS_AS(HermitianOperator(Eigen::MatrixXcd::Zero(0, 0)), std::invalid_argument);

    Eigen::MatrixXcd skew(2, 2);
    skew << 1.0, Complex(0.0, 1e-6), Complex(0.0, 1e-6), 1.0;  // A != A^dagger
    REQUIRE_THROWS_AS(HermitianOperator(skew), std::invalid_argument);

    Eigen::MatrixXcd nearly(2, 2);
    nearly << 1.0, Complex(0.5, 1e-14), Complex(0.5, -1e-14), 1.0;
    REQUIRE_NOTHROW(HermitianOperator(nearly));
}

TEST_CASE("schatten norms on a fixed spectrum", "[operator-core]") {
    const HermitianOperator a{diag_matrix({3.0, -4.0})};
    REQUIRE(schatten_norm(a, 1.0) == Catch::Approx(7.0).margin(1e-12));
    REQUIRE(schatten_norm(a, kInf) == Catch::Approx(4.0).margin(1e-12));
    REQUIRE(schatten_norm(a, 2.0) == Catch::Approx(5.0).margin(1e-12));
    REQUIRE_THROWS_AS(schatten_norm(a, 0.5), std::domain_error);
}

TEST_CASE("schatten norm properties on random matrices", "[operator-core]") {
    const double orders[] = {1.0, 1.5, 2.0, 3.0, 7.0, kInf};
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int dim = 2 + static_cast<int>(seed % 7);
        const Eigen::MatrixXcd a = qtest::random_complex_matrix(dim, dim, mix64(seed));
        const Eigen::MatrixXcd b = qtest::random_complex_matrix(dim, dim, mix64(seed + 1000));

        // Monotonicity in p.
        for (std::size_t i = 0; i + 1 < std::size(orders); ++i) {
            REQUIRE(schatten_norm(a, orders[i + 1]) <= schatten_norm(a, orders[i]) + 1e-10);
        }
        // Trace duality chain.
        const double trace_ab = std::abs((a * b).trace());
        REQUIRE(trace_ab <= schatten_norm(a, 1.0) * schatten_norm(b, kInf) + 1e-9);
        REQUIRE(schatten_norm(a, 1.0) * schatten_norm(b, kInf) <=
                schatten_norm(a, 1.0) * schatten_norm(b, 1.0) + 1e-9);
        // Submultiplicativity.
        REQUIRE(schatten_norm(Eigen::MatrixXcd(a * b), 1.0) <=
                std::min(schatten_norm(a, kInf) * schatten_norm(b, 1.0),
                         schatten_norm(a, 1.0) * schatten_norm(b, kInf)) +
                    1e-9);
        // Adjoint invariance.
        REQUIRE(schatten_norm(Eigen::MatrixXcd(a.adjoint()), 1.5) ==
                Catch::Approx(schatten_norm(a, 1.5)).margin(1e-10));
    }
}

TEST_CASE("lambda_min", "[operator-core]") {
    for (int d : {2, 3, 5}) {
        REQUIRE(lambda_min(HermitianOperator(Eigen::MatrixXcd::Identity(d, d) / d)) ==
                Catch::Approx(1.0 / d).margin(1e-14));
    }
    REQUIRE(lambda_min(HermitianOperator(diag_matrix({0.75, 0.25}))) ==
            Catch::Approx(0.25).margin(1e-14));

    // Independent cross-check against the general (non-selfadjoint) solver.
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const DensityMatrix rho = sample_mixed_ginibre(5, 5, seed);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> general(rho.matrix());
        const double min_real = general.eigenvalues().real().minCoeff();
        REQUIRE(lambda_min(rho.op()) == Catch::Approx(min_real).margin(1e-10));
    }
}

TEST_CASE("spectral decomposition invariants", "[operator-core]") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int dim = 2 + static_cast<int>(seed % 15);
        const HermitianOperator a = random_hermitian(dim, mix64(seed + 99));
        const SpectralDecomposition sd = spectral(a);
        for (int i = 0; i + 1 < dim; ++i) {
            REQUIRE(sd.eigenvalues(i) <= sd.eigenvalues(i + 1));
        }
        const Eigen::MatrixXcd rebuilt =
            sd.eigenvectors * sd.eigenvalues.asDiagonal() * sd.eigenvectors.adjoint();
        REQUIRE(schatten_norm(Eigen::MatrixXcd(rebuilt - a.matrix()), 1.0) <= 1e-10 * dim);
        REQUIRE(max_abs_diff(sd.eigenvectors.adjoint() * sd.eigenvectors,
                             Eigen::MatrixXcd::Identity(dim, dim)) < 1e-12);
    }
}

TEST_CASE("herm_exp", "[operator-core]") {
    const HermitianOperator a = random_hermitian(4, 7);
    REQUIRE(max_abs_diff(herm_exp(a, 0.0).matrix(), Eigen::MatrixXcd::Identity(4, 4)) < 1e-14);

    const HermitianOperator d{diag_matrix({0.3, -1.2})};
    const Eigen::MatrixXcd expected = diag_matrix({std::exp(0.3), std::exp(-1.2)});
    REQUIRE(max_abs_diff(herm_exp(d).matrix(), expected) < 1e-14);

    REQUIRE(lambda_min(herm_exp(a, -2.0)) > 0.0);
}

TEST_CASE("operator norm of the density exponential", "[operator-core]") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const DensityMatrix rho = sample_mixed_ginibre(4, 4, seed);
        for (double s : {0.0, 0.5, 2.0, 10.0}) {
            const double expected = std::exp(-s * rho.lambda_min());
            REQUIRE(schatten_norm(herm_exp(rho.op(), -s), kInf) ==
                    Catch::Approx(expected).margin(1e-12));
        }
    }
}

TEST_CASE("exponential difference identity residual", "[operator-core]") {
    const HermitianOperator a = random_hermitian(4, 21);
    SECTION("equal operators") {
        REQUIRE(exp_identity_residual(a, a, 16) < 1e-12);
    }
    SECTION("commuting pair: diagonal in the same basis") {
        const HermitianOperator x{diag_matrix({0.4, -0.7, 1.1, 0.0})};
        const HermitianOperator y{diag_matrix({-0.2, 0.9, 0.3, -1.0})};
        REQUIRE(exp_identity_residual(x, y, 32) < 1e-10);
    }
    SECTION("random pairs converge in the node count") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const HermitianOperator u = random_hermitian(4, mix64(200 + seed));
            const HermitianOperator v = random_hermitian(4, mix64(300 + seed));
            const double coarse = exp_identity_residual(u, v, 8);
            const double fine = exp_identity_residual(u, v, 64);
            REQUIRE(fine <= 1e-8);
            REQUIRE(fine <= std::max(coarse, 1e-12));
        }
    }
    SECTION("dimension mismatch") {
        REQUIRE_THROWS_AS(exp_identity_residual(a, random_hermitian(5, 1), 8),
                          std::invalid_argument);
    }
}

TEST_CASE("gauss-legendre rules", "[operator-core]") {
    const QuadratureRule two = gauss_legendre(2);
    REQUIRE(two.nodes[0] == Catch::Approx(-1.0 / std::sqrt(3.0)).margin(1e-14));
    REQUIRE(two.nodes[1] == Catch::Approx(1.0 / std::sqrt(3.0)).margin(1e-14));
    REQUIRE(two.weights[0] == Catch::Approx(1.0).margin(1e-14));

    // Exactness for polynomials up to degree 2n-1.
    const QuadratureRule rule = gauss_legendre(5);
    for (int k = 0; k <= 9; ++k) {
        double integral = 0.0;
        for (int i = 0; i < 5; ++i) {
            integral += rule.weights[i] * std::pow(rule.nodes[i], k);
        }
        const double expected = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
        REQUIRE(integral == Catch::Approx(expected).margin(1e-13));
    }

    const QuadratureRule shifted = gauss_legendre(8, 0.0, 3.0);
    double total = 0.0;
    for (int i = 0; i < 8; ++i) {
        total += shifted.weights[i];
    }
    REQUIRE(total == Catch::Approx(3.0).margin(1e-13));
}

// The induced 1-norm of a positive trace-preserving map is at most 1; the
// supremum is not computable exactly, so only a sampled lower bound is
// estimated here.
TEST_CASE("sampled map-norm lower bound stays below one", "[operator-core]") {
    const int dim = 3;
    // Mixed-unitary channel with fixed Kraus pieces.
    std::vector<Eigen::MatrixXcd> unitaries;
    std::vector<double> probs = {0.5, 0.3, 0.2};
    for (std::uint64_t u = 0; u < 3; ++u) {
        const HermitianOperator g = random_hermitian(dim, mix64(4000 + u));
        const SpectralDecomposition sd = spectral(g);
        const auto phases =
            (Complex(0.0, 1.0) * sd.eigenvalues.array().cast<Complex>()).exp().matrix();
        unitaries.push_back(sd.eigenvectors * phases.asDiagonal() * sd.eigenvectors.adjoint());
    }
    double lower_bound = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Eigen::MatrixXcd x = qtest::random_complex_matrix(dim, dim, mix64(5000 + seed));
        Eigen::MatrixXcd mapped = Eigen::MatrixXcd::Zero(dim, dim);
        for (std::size_t u = 0; u < unitaries.size(); ++u) {
            mapped += probs[u] * unitaries[u] * x * unitaries[u].adjoint();
        }
        lower_bound = std::max(lower_bound, schatten_norm(mapped, 1.0) / schatten_norm(x, 1.0));
    }
    REQUIRE(lower_bound <= 1.0 + 1e-9);
    REQUIRE(lower_bound > 0.1);
}
