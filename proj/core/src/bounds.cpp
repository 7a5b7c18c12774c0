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

#include "qfib/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "qfib/parallel.hpp"
#include "qfib/rng.hpp"

namespace qfib {

namespace {

void require_full_rank(const DensityMatrix& state, double floor, const char* what) {
    if (state.lambda_min() < floor) {
        throw std::domain_error(std::string(what) +
                                ": smallest eigenvalue below the full-rank floor");
    }
}

/// (e^{-s b} - e^{-s a}) / (a - b), evaluated stably; equals s e^{-s a}
/// in the limit b -> a.
double exp_difference_quotient(double s, double a, double b) {
    const double delta = a - b;
    if (std::abs(delta) < 1e-10) {
        return s * std::exp(-s * 0.5 * (a + b));
    }
    return std::exp(-s * a) * std::expm1(s * delta) / delta;
}

struct PairScalars {
    double lr, ls, nu, trace_dist, drho_inf, dsigma_inf, ddiff_inf;
};

PairScalars pair_scalars(const TangentState& t_rho, const TangentState& t_sigma) {
    PairScalars v{};
    v.lr = t_rho.rho.lambda_min();
    v.ls = t_sigma.rho.lambda_min();
    v.nu = nu_factor(t_rho.rho, t_sigma.rho);
    v.trace_dist = trace_distance(t_rho.rho, t_sigma.rho);
    v.drho_inf = schatten_norm(t_rho.drho, kInf);
    v.dsigma_inf = schatten_norm(t_sigma.drho, kInf);
    v.ddiff_inf = schatten_norm(
        Eigen::MatrixXcd(t_rho.drho.matrix() - t_sigma.drho.matrix()), kInf);
    return v;
}

}  // namespace

double nu_factor(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const double lr = rho.lambda_min();
    const double ls = sigma.lambda_min();
    if (lr <= 0.0 || ls <= 0.0) {
        throw std::domain_error("nu_factor: states must be full rank");
    }
    return 1.0 / (std::pow(lr, 4) * std::pow(ls, 4));
}

BoundReport exp_diff_bound(const DensityMatrix& rho, const DensityMatrix& sigma, double s,
                           double full_rank_floor) {
    if (s < 0.0) {
        throw std::invalid_argument("exp_diff_bound: s must be nonnegative");
    }
    require_full_rank(rho, full_rank_floor, "exp_diff_bound");
    require_full_rank(sigma, full_rank_floor, "exp_diff_bound");
    const Eigen::MatrixXcd diff =
        herm_exp(rho.op(), -s).matrix() - herm_exp(sigma.op(), -s).matrix();
    const double lhs = schatten_norm(diff, kInf);
    const double lr = rho.lambda_min();
    const double ls = sigma.lambda_min();
    const double t = trace_distance(rho, sigma);
    const double coeff = exp_difference_quotient(s, lr, ls);
    return make_report("exp-diff", lhs, coeff * t,
                       {{"s", s},
                        {"lambda_min_rho", lr},
                        {"lambda_min_sigma", ls},
                        {"trace_dist", t},
                        {"coefficient", coeff}});
}

BoundReport sld_norm_bound(const TangentState& t, double full_rank_floor) {
    require_full_rank(t.rho, full_rank_floor, "sld_norm_bound");
    const SldResult sld = sld_spectral(t);
    const double lhs = schatten_norm(sld.l, kInf);
    const double dnorm = schatten_norm(t.drho, kInf);
    const double lmin = t.rho.lambda_min();
    return make_report("sld-norm", lhs, dnorm / lmin,
                       {{"lambda_min_rho", lmin},
                        {"drho_inf", dnorm},
                        {"sld_residual", sld.residual}});
}

BoundReport sld_continuity_bound(const TangentState& t_rho, const TangentState& t_sigma,
                                 ContinuityVariant variant, double full_rank_floor) {
    if (t_rho.dim() != t_sigma.dim()) {
        throw std::invalid_argument("sld_continuity_bound: dimension mismatch");
    }
    require_full_rank(t_rho.rho, full_rank_floor, "sld_continuity_bound");
    require_full_rank(t_sigma.rho, full_rank_floor, "sld_continuity_bound");

    const PairScalars v = pair_scalars(t_rho, t_sigma);
    const Eigen::MatrixXcd l_diff =
        sld_spectral(t_rho).l.matrix() - sld_spectral(t_sigma).l.matrix();
    const double lhs = schatten_norm(l_diff, kInf);

    double rhs = 0.0;
    if (variant == ContinuityVariant::kTight) {
        rhs = v.dsigma_inf * (2.0 * v.lr + v.trace_dist) * v.trace_dist /
                  (v.lr * v.ls * (v.lr + v.ls)) +
              v.ddiff_inf / v.lr;
    } else {
        rhs = 0.5 * v.nu * v.dsigma_inf * (2.0 + v.trace_dist) * v.trace_dist +
              v.ddiff_inf / v.lr;
    }
    const char* id =
        variant == ContinuityVariant::kTight ? "sld-continuity-tight" : "sld-continuity-loose";
    return make_report(id, lhs, rhs,
                       {{"lambda_min_rho", v.lr},
                        {"lambda_min_sigma", v.ls},
                        {"nu", v.nu},
                        {"trace_dist", v.trace_dist},
                        {"dsigma_inf", v.dsigma_inf},
                        {"ddiff_inf", v.ddiff_inf}});
}

double ContinuityCoefficients::state_series(double trace_dist) const {
    const double t = trace_dist;
    return ((f4 * t + f3) * t + f2) * t * t + f1 * t;
}

double ContinuityCoefficients::deriv_series(double deriv_dist) const {
    return g1 * deriv_dist + g2 * deriv_dist * deriv_dist;
}

ContinuityCoefficients continuity_coefficients(const TangentState& t_rho,
                                               const TangentState& t_sigma,
                                               double full_rank_floor) {
    require_full_rank(t_rho.rho, full_rank_floor, "continuity_coefficients");
    require_full_rank(t_sigma.rho, full_rank_floor, "continuity_coefficients");
    const PairScalars v = pair_scalars(t_rho, t_sigma);
    const double s = v.dsigma_inf;
    const double r = v.drho_inf;
    const double d = v.ddiff_inf;
    ContinuityCoefficients c;
    c.f1 = 2.0 * v.nu * (s * d + s * s + 2.0 * r * r);
    // The quadratic coefficient carries sigma's derivative norm twice.
    c.f2 = v.nu * s * (s + s + d);
    c.f3 = 0.5 * v.nu * s * s;
    c.f4 = 0.25 * v.nu * s * s;
    c.g1 = 2.0 * v.nu * s;
    c.g2 = v.nu;
    return c;
}

BoundReport qfi_continuity_bound(const TangentState& t_rho, const TangentState& t_sigma,
                                 double full_rank_floor) {
    if (t_rho.dim() != t_sigma.dim()) {
        throw std::invalid_argument("qfi_continuity_bound: dimension mismatch");
    }
    require_full_rank(t_rho.rho, full_rank_floor, "qfi_continuity_bound");
    require_full_rank(t_sigma.rho, full_rank_floor, "qfi_continuity_bound");

    const PairScalars v = pair_scalars(t_rho, t_sigma);
    const ContinuityCoefficients c = continuity_coefficients(t_rho, t_sigma, full_rank_floor);
    const double lhs = std::abs(qfi(t_rho) - qfi(t_sigma));
    const double rhs = c.state_series(v.trace_dist) + c.deriv_series(v.ddiff_inf);

    // Intermediate SLD stage of the chain, with the measured SLD norms,
    // kept so the two stages can be audited separately.
    const Eigen::MatrixXcd l_rho = sld_spectral(t_rho).l.matrix();
    const Eigen::MatrixXcd l_sigma = sld_spectral(t_sigma).l.matrix();
    const double d_actual = schatten_norm(Eigen::MatrixXcd(l_rho - l_sigma), kInf);
    const double l_sigma_inf = schatten_norm(l_sigma, kInf);
    const double l_rho_inf = schatten_norm(l_rho, kInf);
    const double stage_rhs =
        d_actual * (d_actual + 2.0 * l_sigma_inf) + l_rho_inf * l_rho_inf * v.trace_dist;

    return make_report("qfi-continuity", lhs, rhs,
                       {{"lambda_min_rho", v.lr},
                        {"lambda_min_sigma", v.ls},
                        {"nu", v.nu},
                        {"trace_dist", v.trace_dist},
                        {"ddiff_inf", v.ddiff_inf},
                        {"f1", c.f1},
                        {"f2", c.f2},
                        {"f3", c.f3},
                        {"f4", c.f4},
                        {"g1", c.g1},
                        {"g2", c.g2},
                        {"sld_stage_rhs", stage_rhs}});
}

BoundReport unitary_sld_bound(const DensityMatrix& rho0, const DensityMatrix& sigma0,
                              const HermitianOperator& h, double x, ContinuityVariant variant,
                              double full_rank_floor) {
    if (rho0.dim() != sigma0.dim() || rho0.dim() != h.dim()) {
        throw std::invalid_argument("unitary_sld_bound: dimension mismatch");
    }
    require_full_rank(rho0, full_rank_floor, "unitary_sld_bound");
    require_full_rank(sigma0, full_rank_floor, "unitary_sld_bound");

    const TangentState t_rho = phase_channel(rho0, h, x);
    const TangentState t_sigma = phase_channel(sigma0, h, x);
    const double lr = t_rho.rho.lambda_min();
    const double ls = t_sigma.rho.lambda_min();
    const double nu = nu_factor(t_rho.rho, t_sigma.rho);
    const double h_inf = schatten_norm(h, kInf);
    const double t_at_x = trace_distance(t_rho.rho, t_sigma.rho);
    const double t_at_0 = trace_distance(rho0, sigma0);

    const Eigen::MatrixXcd l_diff =
        sld_spectral(t_rho).l.matrix() - sld_spectral(t_sigma).l.matrix();
    const double lhs = schatten_norm(l_diff, kInf);

    double rhs = 0.0;
    if (variant == ContinuityVariant::kTight) {
        rhs = 2.0 * h_inf * t_at_x * (ls * (lr + ls) + 2.0 * lr + t_at_x) /
              (lr * ls * (lr + ls));
    } else {
        rhs = nu * h_inf * t_at_x * (4.0 + t_at_x);
    }
    const char* id =
        variant == ContinuityVariant::kTight ? "unitary-sld-tight" : "unitary-sld-loose";
    return make_report(id, lhs, rhs,
                       {{"x", x},
                        {"h_inf", h_inf},
                        {"lambda_min_rho", lr},
                        {"lambda_min_sigma", ls},
                        {"nu", nu},
                        {"trace_dist", t_at_x},
                        {"trace_dist_initial", t_at_0},
                        {"unitary_invariance_gap", std::abs(t_at_x - t_at_0)}});
}

namespace {

const std::vector<BoundCatalogEntry> kCatalog = {
    {"norm-duality",
     "|Tr[AB]| <= ||A||_1 ||B||_inf <= ||A||_1 ||B||_1 on random matrix pairs"},
    {"norm-monotonicity", "||A||_q <= ||A||_p for p <= q (Schatten scale)"},
    {"norm-submult", "||AB||_1 <= min(||A||_inf ||B||_1, ||A||_1 ||B||_inf)"},
    {"fidelity-trace",
     "1 - F <= (1/2)||rho-sigma||_1 <= sqrt(1 - F^2) (fidelity vs trace norm)"},
    {"exp-diff",
     "||e^{-s rho} - e^{-s sigma}||_inf bounded via smallest-eigenvalue difference quotient"},
    {"sld-norm", "||L||_inf <= ||drho||_inf / lambda_min(rho)"},
    {"sld-continuity-tight",
     "SLD distance bounded by the eigenvalue-form state and derivative terms"},
    {"sld-continuity-loose", "SLD distance bounded by the nu-form state and derivative terms"},
    {"sld-continuity-dominance", "loose SLD-continuity rhs dominates the tight rhs"},
    {"qfi-continuity",
     "QFI difference bounded by the quartic state series plus quadratic derivative series"},
    {"unitary-sld-tight", "unitary-scenario SLD continuity, eigenvalue form"},
    {"unitary-sld-loose", "unitary-scenario SLD continuity, nu form"},
    {"ext-convexity",
     "mixture QFI <= classical weight term + average component QFI"},
    {"cfi-vs-qfi", "classical Fisher information of any POVM <= QFI"},
    {"eg-trace", "||rho - sigma_sep||_1 <= 2 sqrt(E_G-estimate) for the found ansatz"},
    {"qfi-entanglement",
     "QFI <= separable QFI + 16 (sum f_m) sqrt(E_G) + derivative series"},
    {"sld-entanglement", "||L_rho - L_sigma*||_inf <= 12 nu ||H||_inf sqrt(E_G)"},
    {"scaling-v1", "QFI <= F^Q(sigma*) + 208 nu^2 ||H||_inf^2 sqrt(E_G)"},
    {"scaling-v2", "QFI <= alpha_CQ N + 208 nu^2 ||H||_inf^2 sqrt(E_G)"},
    {"scaling-v3", "QFI <= alpha_CQ N + alpha_QQ C(N,k)^2 nu^2 sqrt(E_G)"},
    {"klocal-norm", "||H||_inf <= C(N,k) max_j ||H_j||_inf for k-local H"},
    {"qfi-additivity", "QFI additivity gap on product tangents vs 1e-8"},
};

constexpr std::uint64_t kStreamStateRho = 1;
constexpr std::uint64_t kStreamStateSigma = 2;
constexpr std::uint64_t kStreamTangentRho = 3;
constexpr std::uint64_t kStreamTangentSigma = 4;
constexpr std::uint64_t kStreamMatrixA = 5;
constexpr std::uint64_t kStreamMatrixB = 6;
constexpr std::uint64_t kStreamPovm = 7;
constexpr std::uint64_t kStreamHamiltonian = 8;
constexpr std::uint64_t kStreamMixture = 9;
constexpr std::uint64_t kStreamPq = 10;

Eigen::MatrixXcd ginibre_matrix(int dim, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = rng.cnormal();
        }
    }
    return g / std::sqrt(static_cast<double>(dim));
}

HermitianOperator gue_normalized(int dim, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = rng.cnormal();
        }
    }
    Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
    HermitianOperator op{std::move(h)};
    const double norm = schatten_norm(op, kInf);
    return norm > 0.0 ? HermitianOperator(op.matrix() / norm) : op;
}

const double kExpDiffGrid[] = {0.1, 1.0, 10.0};
const double kUnitaryGrid[] = {0.0, 0.3, 1.0};
const double kNormOrders[] = {1.0, 1.5, 2.0, 3.0, 4.0, kInf};

/// Rows one sample contributes for one bound id.
long rows_for_id(const std::string& id) {
    if (id == "exp-diff") {
        return static_cast<long>(std::size(kExpDiffGrid));
    }
    if (id == "unitary-sld-tight" || id == "unitary-sld-loose") {
        return static_cast<long>(std::size(kUnitaryGrid));
    }
    return 1;
}

struct SampleInputs {
    std::uint64_t base_seed = 0;
    int dim = 0;
    double lambda_floor = 0.0;

    TangentState tangent(std::uint64_t state_stream, std::uint64_t tangent_stream) const {
        DensityMatrix rho =
            sample_full_rank_density(dim, lambda_floor, derive_seed(base_seed, state_stream, 0));
        return sample_tangent(rho, 1.0, derive_seed(base_seed, tangent_stream, 0));
    }
};

void evaluate_id(const std::string& id, const SampleInputs& in, const BatchConfig& config,
                 std::vector<BoundReport>& out) {
    if (id == "norm-duality" || id == "norm-monotonicity" || id == "norm-submult") {
        const Eigen::MatrixXcd a = ginibre_matrix(in.dim, derive_seed(in.base_seed, kStreamMatrixA, 0));
        if (id == "norm-duality") {
            const Eigen::MatrixXcd b =
                ginibre_matrix(in.dim, derive_seed(in.base_seed, kStreamMatrixB, 0));
            const double lhs = std::abs((a * b).trace());
            const double a1 = schatten_norm(a, 1.0);
            const double rhs = a1 * schatten_norm(b, kInf);
            const double rhs2 = a1 * schatten_norm(b, 1.0);
            BoundReport report = make_report(id, lhs, rhs, {{"chain_rhs2", rhs2}});
            report.satisfied =
                report.satisfied && rhs <= rhs2 + satisfaction_tol(rhs2);
            out.push_back(std::move(report));
            return;
        }
        if (id == "norm-monotonicity") {
            Rng rng(derive_seed(in.base_seed, kStreamPq, 0));
            const int np = static_cast<int>(std::size(kNormOrders));
            int ip = static_cast<int>(rng.uniform() * np) % np;
            int iq = static_cast<int>(rng.uniform() * np) % np;
            if (ip > iq) {
                std::swap(ip, iq);
            }
            const double p = kNormOrders[ip];
            const double q = kNormOrders[iq];
            out.push_back(make_report(id, schatten_norm(a, q), schatten_norm(a, p),
                                      {{"p", p}, {"q", q}}));
            return;
        }
        const Eigen::MatrixXcd b =
            ginibre_matrix(in.dim, derive_seed(in.base_seed, kStreamMatrixB, 0));
        const double lhs = schatten_norm(Eigen::MatrixXcd(a * b), 1.0);
        const double rhs = std::min(schatten_norm(a, kInf) * schatten_norm(b, 1.0),
                                    schatten_norm(a, 1.0) * schatten_norm(b, kInf));
        out.push_back(make_report(id, lhs, rhs, {}));
        return;
    }

    if (id == "fidelity-trace") {
        const DensityMatrix rho = sample_full_rank_density(
            in.dim, in.lambda_floor, derive_seed(in.base_seed, kStreamStateRho, 0));
        const DensityMatrix sigma = sample_full_rank_density(
            in.dim, in.lambda_floor, derive_seed(in.base_seed, kStreamStateSigma, 0));
        out.push_back(fvg_check(rho, sigma));
        return;
    }

    if (id == "exp-diff") {
        const DensityMatrix rho = sample_full_rank_density(
            in.dim, in.lambda_floor, derive_seed(in.base_seed, kStreamStateRho, 0));
        const DensityMatrix sigma = sample_full_rank_density(
            in.dim, in.lambda_floor, derive_seed(in.base_seed, kStreamStateSigma, 0));
        for (double s : kExpDiffGrid) {
            out.push_back(exp_diff_bound(rho, sigma, s, config.full_rank_floor));
        }
        return;
    }

    if (id == "sld-norm") {
        out.push_back(sld_norm_bound(in.tangent(kStreamStateRho, kStreamTangentRho),
                                     config.full_rank_floor));
        return;
    }

    if (id == "sld-continuity-tight" || id == "sld-continuity-loose" ||
        id == "sld-continuity-dominance" || id == "qfi-continuity") {
        const TangentState t_rho = in.tangent(kStreamStateRho, kStreamTangentRho);
        const TangentState t_sigma = in.tangent(kStreamStateSigma, kStreamTangentSigma);
        if (id == "qfi-continuity") {
            out.push_back(qfi_continuity_bound(t_rho, t_sigma, config.full_rank_floor));
            return;
        }
        const BoundReport tight =
            sld_continuity_bound(t_rho, t_sigma, ContinuityVariant::kTight,
                                 config.full_rank_floor);
        if (id == "sld-continuity-tight") {
            out.push_back(tight);
            return;
        }
        const BoundReport loose =
            sld_continuity_bound(t_rho, t_sigma, ContinuityVariant::kLoose,
                                 config.full_rank_floor);
        if (id == "sld-continuity-loose") {
            out.push_back(loose);
            return;
        }
        out.push_back(make_report("sld-continuity-dominance", tight.rhs, loose.rhs,
                                  {{"lhs_sld_dist", tight.lhs}}));
        return;
    }

    if (id == "unitary-sld-tight" || id == "unitary-sld-loose") {
        const DensityMatrix rho0 = sample_full_rank_density(
            in.dim, in.lambda_floor, derive_seed(in.base_seed, kStreamStateRho, 0));
        const DensityMatrix sigma0 = sample_full_rank_density(
            in.dim, in.lambda_floor, derive_seed(in.base_seed, kStreamStateSigma, 0));
        const HermitianOperator h =
            gue_normalized(in.dim, derive_seed(in.base_seed, kStreamHamiltonian, 0));
        const ContinuityVariant variant = id == "unitary-sld-tight" ? ContinuityVariant::kTight
                                                                    : ContinuityVariant::kLoose;
        for (double x : kUnitaryGrid) {
            out.push_back(unitary_sld_bound(rho0, sigma0, h, x, variant,
                                            config.full_rank_floor));
        }
        return;
    }

    if (id == "ext-convexity") {
        Rng rng(derive_seed(in.base_seed, kStreamMixture, 0));
        const double w = 0.2 + 0.6 * rng.uniform();
        const double dw = rng.uniform() - 0.5;
        std::vector<WeightedTangent> components;
        components.push_back({w, in.tangent(kStreamStateRho, kStreamTangentRho)});
        components.push_back({1.0 - w, in.tangent(kStreamStateSigma, kStreamTangentSigma)});
        Eigen::VectorXd dweights(2);
        dweights << dw, -dw;
        out.push_back(extended_convexity_gap(components, dweights));
        return;
    }

    if (id == "cfi-vs-qfi") {
        const TangentState t = in.tangent(kStreamStateRho, kStreamTangentRho);
        const Povm povm = sample_projective_povm(in.dim, derive_seed(in.base_seed, kStreamPovm, 0));
        out.push_back(make_report(id, povm_cfi(t, povm), qfi(t), {}));
        return;
    }

    throw std::invalid_argument("batch_verify: unknown bound id '" + id + "'");
}

}  // namespace

const std::vector<BoundCatalogEntry>& bound_catalog() { return kCatalog; }

std::vector<std::string> default_bound_suite_ids() {
    return {"norm-duality",          "norm-monotonicity",      "norm-submult",
            "fidelity-trace",        "exp-diff",               "sld-norm",
            "sld-continuity-tight",  "sld-continuity-loose",   "sld-continuity-dominance",
            "qfi-continuity",        "unitary-sld-tight",      "unitary-sld-loose",
            "ext-convexity",         "cfi-vs-qfi"};
}

std::vector<std::string> unitary_suite_ids() {
    return {"unitary-sld-tight", "unitary-sld-loose"};
}

std::vector<ReportRow> batch_verify(const BatchConfig& config) {
    if (config.samples < 0) {
        throw std::invalid_argument("batch_verify: samples must be >= 0");
    }
    const std::vector<std::string> ids =
        config.bound_ids.empty() ? default_bound_suite_ids() : config.bound_ids;
    {
        // Validate ids up front so failures happen before any sampling.
        std::unordered_set<std::string> supported;
        for (const auto& entry : kCatalog) {
            supported.insert(entry.id);
        }
        const auto batch_only = default_bound_suite_ids();
        for (const auto& id : ids) {
            if (std::find(batch_only.begin(), batch_only.end(), id) == batch_only.end()) {
                throw std::invalid_argument(
                    "batch_verify: bound id '" + id +
                    (supported.count(id) ? "' is not batch-verifiable" : "' is unknown"));
            }
        }
    }

    long rows_per_sample = 0;
    for (const auto& id : ids) {
        rows_per_sample += rows_for_id(id);
    }
    const long n_dims = static_cast<long>(config.dims.size());
    const long total_samples = n_dims * config.samples;
    std::vector<ReportRow> rows(static_cast<std::size_t>(total_samples * rows_per_sample));

    parallel_for(
        total_samples,
        [&](long g) {
            const long dim_index = g / config.samples;
            const long sample = g % config.samples;
            const int dim = config.dims[static_cast<std::size_t>(dim_index)];
            SampleInputs in;
            in.base_seed =
                derive_seed(config.seed, static_cast<std::uint64_t>(dim), static_cast<std::uint64_t>(sample));
            in.dim = dim;
            in.lambda_floor = config.lambda_floor;

            std::vector<BoundReport> reports;
            reports.reserve(static_cast<std::size_t>(rows_per_sample));
            for (const auto& id : ids) {
                evaluate_id(id, in, config, reports);
            }
            for (std::size_t r = 0; r < reports.size(); ++r) {
                ReportRow& row = rows[static_cast<std::size_t>(g * rows_per_sample) + r];
                row.experiment = config.experiment;
                row.sample_index = sample;
                row.sample_seed = in.base_seed;
                row.dim = dim;
                row.report = std::move(reports[r]);
            }
        },
        config.threads);

    return rows;
}

}  // namespace qfib
