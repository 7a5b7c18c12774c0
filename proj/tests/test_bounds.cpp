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
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "qfib/bounds.hpp"

using namespace qfib;
using qtest::diag_density;
using qtest::diag_matrix;

namespace {

TangentState tangent_at(int dim, double floor_value, std::uint64_t seed) {
    const DensityMatrix rho = sample_full_rank_density(dim, floor_value, seed);
    return sample_tangent(rho, 1.0, mix64(seed ^ 0x5ADD1EULL));
}

Eigen::MatrixXcd off_diag(double v) {
    Eigen::MatrixXcd m(2, 2);
    m << 0.0, v, v, 0.0;
    return m;
}

}  // namespace

TEST_CASE("report satisfaction rule", "[bounds]") {
    const BoundReport ok = make_report("x", 1.0, 1.0);
    REQUIRE(ok.satisfied);
    REQUIRE(ok.slack == 0.0);
    const BoundReport infinite = make_report("x", 5.0, kInf);
    REQUIRE(infinite.satisfied);
    REQUIRE(std::isinf(infinite.slack));
    const BoundReport barely = make_report("x", 1.0 + 5e-10, 1.0);
    REQUIRE(barely.satisfied);
    const BoundReport violated = make_report("x", 1.0 + 1e-8, 1.0);
    REQUIRE_FALSE(violated.satisfied);
}

TEST_CASE("exponential difference bound", "[bounds]") {
    const DensityMatrix rho = sample_full_rank_density(2, 0.05, 21);
    SECTION("identical states and s = 0") {
        const BoundReport same = exp_diff_bound(rho, rho, 1.0);
        REQUIRE(same.satisfied);
        REQUIRE(same.lhs == Catch::Approx(0.0).margin(1e-12));
        REQUIRE(same.rhs == Catch::Approx(0.0).margin(1e-12));
        const BoundReport zero_s = exp_diff_bound(rho, sample_full_rank_density(2, 0.05, 22), 0.0);
        REQUIRE(zero_s.lhs == Catch::Approx(0.0).margin(1e-12));
        REQUIRE(zero_s.rhs == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("random pairs across the s grid") {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const DensityMatrix a = sample_full_rank_density(2, 0.01, mix64(100 + seed));
            const DensityMatrix b = sample_full_rank_density(2, 0.01, mix64(300 + seed));
            for (double s : {0.1, 1.0, 10.0}) {
                REQUIRE(exp_diff_bound(a, b, s).satisfied);
            }
        }
    }
    SECTION("degenerate smallest eigenvalues evaluate continuously") {
        const double lam = 0.3;
        for (double s : {0.1, 1.0, 10.0}) {
            const DensityMatrix a = diag_density({lam, 1.0 - lam});
            const DensityMatrix b = diag_density({lam + 1e-10, 1.0 - lam - 1e-10});
            const BoundReport near = exp_diff_bound(a, b, s);
            const double limit_coeff = s * std::exp(-s * (lam + 0.5e-10));
            REQUIRE(near.context.at("coefficient") ==
                    Catch::Approx(limit_coeff).epsilon(1e-6));
        }
    }
    SECTION("full-rank guard") {
        Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(2);
        e0(0) = 1.0;
        REQUIRE_THROWS_AS(exp_diff_bound(DensityMatrix::pure(e0), rho, 1.0),
                          std::domain_error);
    }
}

TEST_CASE("sld norm bound", "[bounds]") {
    SECTION("zero derivative") {
        const DensityMatrix rho = sample_full_rank_density(3, 0.05, 3);
        const BoundReport report =
            sld_norm_bound(TangentState{rho, HermitianOperator::zero(3)});
        REQUIRE(report.satisfied);
        REQUIRE(report.lhs == Catch::Approx(0.0).margin(1e-13));
    }
    SECTION("maximally mixed qubit saturates") {
        const TangentState t{DensityMatrix::maximally_mixed(2),
                             HermitianOperator(off_diag(0.5))};
        const BoundReport report = sld_norm_bound(t);
        REQUIRE(report.lhs == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(report.rhs == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(report.satisfied);
    }
    SECTION("random full-rank tangents") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const int dim = 2 + static_cast<int>(seed % 7);
            REQUIRE(sld_norm_bound(tangent_at(dim, 0.02, mix64(seed))).satisfied);
        }
    }
}

TEST_CASE("sld continuity bounds", "[bounds]") {
    SECTION("identical tangents") {
        const TangentState t = tangent_at(2, 0.05, 77);
        const BoundReport report =
            sld_continuity_bound(t, t, ContinuityVariant::kTight);
        REQUIRE(report.satisfied);
        REQUIRE(report.lhs == Catch::Approx(0.0).margin(1e-10));
    }
    SECTION("random pairs satisfy both variants and the dominance order") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const int dim = 2 + static_cast<int>(seed % 3);
            const TangentState a = tangent_at(dim, 0.01, mix64(4000 + seed));
            const TangentState b = tangent_at(dim, 0.01, mix64(5000 + seed));
            const BoundReport tight = sld_continuity_bound(a, b, ContinuityVariant::kTight);
            const BoundReport loose = sld_continuity_bound(a, b, ContinuityVariant::kLoose);
            REQUIRE(tight.satisfied);
            REQUIRE(loose.satisfied);
            REQUIRE(tight.rhs <= loose.rhs + 1e-9 * std::max(1.0, loose.rhs));
        }
    }
    SECTION("equal states isolate the derivative term") {
        const DensityMatrix rho = sample_full_rank_density(2, 0.05, 91);
        const TangentState a = sample_tangent(rho, 1.0, 11);
        const TangentState b = sample_tangent(rho, 1.0, 12);
        const BoundReport tight = sld_continuity_bound(a, b, ContinuityVariant::kTight);
        const double expected =
            schatten_norm(Eigen::MatrixXcd(a.drho.matrix() - b.drho.matrix()), kInf) /
            rho.lambda_min();
        REQUIRE(tight.rhs == Catch::Approx(expected).margin(1e-10));
        REQUIRE(tight.satisfied);
    }
}

TEST_CASE("continuity coefficients", "[bounds]") {
    SECTION("zero derivatives leave only the quadratic derivative weight") {
        const DensityMatrix rho = sample_full_rank_density(2, 0.05, 61);
        const DensityMatrix sigma = sample_full_rank_density(2, 0.05, 62);
        const TangentState a{rho, HermitianOperator::zero(2)};
        const TangentState b{sigma, HermitianOperator::zero(2)};
        const ContinuityCoefficients c = continuity_coefficients(a, b);
        REQUIRE(c.f1 == 0.0);
        REQUIRE(c.f2 == 0.0);
        REQUIRE(c.f3 == 0.0);
        REQUIRE(c.f4 == 0.0);
        REQUIRE(c.g1 == 0.0);
        REQUIRE(c.g2 == Catch::Approx(nu_factor(rho, sigma)).epsilon(1e-12));
    }
    SECTION("plug-in arithmetic on maximally mixed qubits") {
        // lambda_min = 1/2 on both sides: nu = 2^8; unit-norm derivatives.
        const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
        const TangentState a{mixed, HermitianOperator(off_diag(0.5))};
        const TangentState b{mixed, HermitianOperator(off_diag(0.5))};
        const ContinuityCoefficients c = continuity_coefficients(a, b);
        const double nu = 256.0;
        // S = R = 1/2, Delta = 0.
        REQUIRE(c.f1 == Catch::Approx(2.0 * nu * 0.75).epsilon(1e-12));
        REQUIRE(c.f2 == Catch::Approx(nu * 0.5).epsilon(1e-12));
        REQUIRE(c.f3 == Catch::Approx(0.5 * nu * 0.25).epsilon(1e-12));
        REQUIRE(c.f4 == Catch::Approx(0.25 * nu * 0.25).epsilon(1e-12));
        REQUIRE(c.g1 == Catch::Approx(2.0 * nu * 0.5).epsilon(1e-12));
        REQUIRE(c.g2 == Catch::Approx(nu).epsilon(1e-12));
    }
    SECTION("scaling both derivatives by c scales f by c^2 and g1 by c") {
        const TangentState a = tangent_at(2, 0.05, 63);
        const TangentState b = tangent_at(2, 0.05, 64);
        const double factor = 3.0;
        const TangentState a2{a.rho, HermitianOperator(factor * a.drho.matrix())};
        const TangentState b2{b.rho, HermitianOperator(factor * b.drho.matrix())};
        const ContinuityCoefficients c1 = continuity_coefficients(a, b);
        const ContinuityCoefficients c2 = continuity_coefficients(a2, b2);
        REQUIRE(c2.f1 == Catch::Approx(factor * factor * c1.f1).epsilon(1e-10));
        REQUIRE(c2.f2 == Catch::Approx(factor * factor * c1.f2).epsilon(1e-10));
        REQUIRE(c2.f3 == Catch::Approx(factor * factor * c1.f3).epsilon(1e-10));
        REQUIRE(c2.f4 == Catch::Approx(factor * factor * c1.f4).epsilon(1e-10));
        REQUIRE(c2.g1 == Catch::Approx(factor * c1.g1).epsilon(1e-10));
        REQUIRE(c2.g2 == Catch::Approx(c1.g2).epsilon(1e-10));
    }
}

TEST_CASE("qfi continuity bound", "[bounds]") {
    SECTION("identical inputs") {
        const TangentState t = tangent_at(3, 0.05, 71);
        const BoundReport report = qfi_continuity_bound(t, t);
        REQUIRE(report.satisfied);
        REQUIRE(report.lhs == Catch::Approx(0.0).margin(1e-9));
    }
    SECTION("random qubit and qutrit pairs") {
        for (std::uint64_t seed = 0; seed < 400; ++seed) {
            const int dim = 2 + static_cast<int>(seed % 2);
            const BoundReport report = qfi_continuity_bound(
                tangent_at(dim, 0.01, mix64(6000 + seed)),
                tangent_at(dim, 0.01, mix64(7000 + seed)));
            REQUIRE(report.satisfied);
            REQUIRE(report.context.count("sld_stage_rhs") == 1);
        }
    }
    SECTION("unitary conjugation leaves the rhs invariant") {
        const TangentState a = tangent_at(3, 0.05, 81);
        const TangentState b = tangent_at(3, 0.05, 82);
        const BoundReport base = qfi_continuity_bound(a, b);
        // Conjugate everything by the same unitary.
        const HermitianOperator g = qtest::random_hermitian(3, 83);
        const SpectralDecomposition sd = spectral(g);
        const auto phases = (std::complex<double>(0.0, 1.0) *
                             sd.eigenvalues.array().cast<std::complex<double>>())
                                .exp()
                                .matrix();
        const Eigen::MatrixXcd u =
            sd.eigenvectors * phases.asDiagonal() * sd.eigenvectors.adjoint();
        auto conjugate = [&](const TangentState& t) {
            Eigen::MatrixXcd rho = u * t.rho.matrix() * u.adjoint();
            Eigen::MatrixXcd drho = u * t.drho.matrix() * u.adjoint();
            rho = 0.5 * (rho + rho.adjoint()).eval();
            drho = 0.5 * (drho + drho.adjoint()).eval();
            return TangentState{DensityMatrix(HermitianOperator(std::move(rho))),
                                HermitianOperator(std::move(drho))};
        };
        const BoundReport rotated = qfi_continuity_bound(conjugate(a), conjugate(b));
        REQUIRE(rotated.rhs == Catch::Approx(base.rhs).epsilon(1e-8));
    }
}

TEST_CASE("unitary-scenario sld bound", "[bounds]") {
    const HermitianOperator half_z{Eigen::MatrixXcd(0.5 * pauli_z())};
    SECTION("identical initial states") {
        const DensityMatrix rho0 = sample_full_rank_density(2, 0.05, 55);
        const BoundReport report =
            unitary_sld_bound(rho0, rho0, half_z, 0.3, ContinuityVariant::kTight);
        REQUIRE(report.satisfied);
        REQUIRE(report.lhs == Catch::Approx(0.0).margin(1e-10));
    }
    SECTION("random pairs over the x grid") {
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            const DensityMatrix rho0 = sample_full_rank_density(2, 0.01, mix64(8000 + seed));
            const DensityMatrix sigma0 = sample_full_rank_density(2, 0.01, mix64(9000 + seed));
            for (double x : {0.0, 0.3, 1.0}) {
                const BoundReport tight =
                    unitary_sld_bound(rho0, sigma0, half_z, x, ContinuityVariant::kTight);
                const BoundReport loose =
                    unitary_sld_bound(rho0, sigma0, half_z, x, ContinuityVariant::kLoose);
                REQUIRE(tight.satisfied);
                REQUIRE(loose.satisfied);
                REQUIRE(tight.context.at("unitary_invariance_gap") < 1e-10);
            }
        }
    }
}

TEST_CASE("batch verifier", "[bounds]") {
    SECTION("zero samples produce an empty report set") {
        BatchConfig config;
        config.dims = {2};
        config.samples = 0;
        REQUIRE(batch_verify(config).empty());
    }
    SECTION("unknown ids are rejected up front") {
        BatchConfig config;
        config.dims = {2};
        config.samples = 1;
        config.bound_ids = {"no-such-bound"};
        REQUIRE_THROWS_AS(batch_verify(config), std::invalid_argument);
        config.bound_ids = {"qfi-entanglement"};  // catalogued but not batchable
        REQUIRE_THROWS_AS(batch_verify(config), std::invalid_argument);
    }
    SECTION("small run is clean, deterministic, and thread-invariant") {
        BatchConfig config;
        config.seed = 42;
        config.dims = {2, 3};
        config.samples = 25;
        config.lambda_floor = 1e-2;

        const std::vector<ReportRow> rows = batch_verify(config);
        REQUIRE_FALSE(rows.empty());
        for (const auto& row : rows) {
            REQUIRE(row.report.satisfied);
        }

        auto to_csv = [](const std::vector<ReportRow>& rs) {
            std::ostringstream out;
            write_reports_csv(out, rs);
            return out.str();
        };
        REQUIRE(to_csv(rows) == to_csv(batch_verify(config)));

        BatchConfig serial = config;
        serial.threads = 1;
        BatchConfig wide = config;
        wide.threads = 4;
        REQUIRE(to_csv(batch_verify(serial)) == to_csv(batch_verify(wide)));
    }
    SECTION("row identity is stable against enabling other ids") {
        BatchConfig narrow;
        narrow.seed = 7;
        narrow.dims = {2};
        narrow.samples = 5;
        narrow.bound_ids = {"sld-norm"};
        BatchConfig broad = narrow;
        broad.bound_ids = {"fidelity-trace", "sld-norm", "qfi-continuity"};

        const auto narrow_rows = batch_verify(narrow);
        const auto broad_rows = batch_verify(broad);
        for (const auto& nrow : narrow_rows) {
            bool found = false;
            for (const auto& brow : broad_rows) {
                if (brow.report.bound_id == "sld-norm" &&
                    brow.sample_index == nrow.sample_index &&
                    brow.report.lhs == nrow.report.lhs &&
                    brow.report.rhs == nrow.report.rhs) {
                    found = true;
                }
            }
            REQUIRE(found);
        }
    }
}

TEST_CASE("bound catalog", "[bounds]") {
    const auto& catalog = bound_catalog();
    REQUIRE(catalog.size() >= 20);
    std::set<std::string> ids;
    for (const auto& entry : catalog) {
        REQUIRE_FALSE(entry.id.empty());
        REQUIRE_FALSE(entry.description.empty());
        ids.insert(entry.id);
    }
    REQUIRE(ids.size() == catalog.size());
    for (const auto& id : default_bound_suite_ids()) {
        REQUIRE(ids.count(id) == 1);
    }
}
