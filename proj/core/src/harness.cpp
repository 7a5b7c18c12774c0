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

#include "qfib/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qfib/fisher.hpp"
#include "qfib/parallel.hpp"
#include "qfib/rng.hpp"
#include "qfib/version.hpp"

namespace qfib {

namespace {

using Complex = std::complex<double>;

constexpr const char* kExperimentNames[] = {
    "bound-suite",   "continuity-sweep",  "unitary-suite",
    "entanglement-suite", "scaling-sweep", "typicality",
};

double get_override(const ExperimentConfig& config, const std::string& key, double fallback) {
    const auto it = config.tolerance_overrides.find(key);
    return it == config.tolerance_overrides.end() ? fallback : it->second;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out << contents;
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

std::string reports_to_string(const std::vector<ReportRow>& rows,
                              ExperimentConfig::Format format) {
    std::ostringstream out;
    if (format == ExperimentConfig::Format::kCsv) {
        write_reports_csv(out, rows);
    } else {
        write_reports_json(out, rows);
    }
    return out.str();
}

double min_slack(const std::vector<ReportRow>& rows) {
    double m = kInf;
    for (const auto& row : rows) {
        m = std::min(m, row.report.slack);
    }
    return rows.empty() ? 0.0 : m;
}

/// Least-squares slope of log(y) against log(x), skipping nonpositive y.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0.0 || y[i] <= 0.0) {
            continue;
        }
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) {
        return 0.0;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

std::string to_string(Experiment e) { return kExperimentNames[static_cast<int>(e)]; }

Experiment experiment_from_string(const std::string& name) {
    for (int i = 0; i < static_cast<int>(std::size(kExperimentNames)); ++i) {
        if (name == kExperimentNames[i]) {
            return static_cast<Experiment>(i);
        }
    }
    throw std::invalid_argument("unknown experiment '" + name + "'");
}

ExperimentConfig parse_config_json(const std::string& text, const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(origin + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument(origin + ": config must be a JSON object");
    }

    static const std::vector<std::string> known = {
        "experiment", "seed",      "dims",       "n_qubits", "samples",
        "rank_floor", "tolerance_overrides", "output_dir", "format"};
    for (const auto& [key, value] : doc.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw std::invalid_argument(origin + ": unknown config key '" + key + "'");
        }
    }
    if (!doc.contains("experiment")) {
        throw std::invalid_argument(origin + ": missing required key 'experiment'");
    }

    ExperimentConfig config;
    config.experiment = experiment_from_string(doc.at("experiment").get<std::string>());
    if (doc.contains("seed")) {
        config.seed = doc.at("seed").get<std::uint64_t>();
    }
    if (doc.contains("dims")) {
        config.dims = doc.at("dims").get<std::vector<int>>();
    }
    if (doc.contains("n_qubits")) {
        config.n_qubits = doc.at("n_qubits").get<std::vector<int>>();
    }
    if (doc.contains("samples")) {
        config.samples = doc.at("samples").get<long>();
        if (config.samples < 0) {
            throw std::invalid_argument(origin + ": samples must be >= 0");
        }
    }
    if (doc.contains("rank_floor")) {
        config.rank_floor = doc.at("rank_floor").get<double>();
    }
    if (doc.contains("tolerance_overrides")) {
        static const std::vector<std::string> known_tols = {"full_rank_floor"};
        for (const auto& [key, value] : doc.at("tolerance_overrides").items()) {
            if (std::find(known_tols.begin(), known_tols.end(), key) == known_tols.end()) {
                throw std::invalid_argument(origin + ": unknown tolerance override '" + key +
                                            "'");
            }
            config.tolerance_overrides[key] = value.get<double>();
        }
    }
    if (doc.contains("output_dir")) {
        config.output_dir = doc.at("output_dir").get<std::string>();
    }
    if (doc.contains("format")) {
        const std::string fmt = doc.at("format").get<std::string>();
        if (fmt == "csv") {
            config.format = ExperimentConfig::Format::kCsv;
        } else if (fmt == "json") {
            config.format = ExperimentConfig::Format::kJson;
        } else {
            throw std::invalid_argument(origin + ": format must be 'csv' or 'json'");
        }
    }

    const bool wants_dims = config.experiment == Experiment::kBoundSuite ||
                            config.experiment == Experiment::kContinuitySweep ||
                            config.experiment == Experiment::kUnitarySuite;
    if (wants_dims) {
        if (config.dims.empty()) {
            throw std::invalid_argument(origin + ": this experiment requires 'dims'");
        }
        int max_dim = 0;
        for (int d : config.dims) {
            if (d < 2) {
                throw std::invalid_argument(origin + ": dims must be >= 2");
            }
            max_dim = std::max(max_dim, d);
        }
        if (config.rank_floor <= 0.0 || config.rank_floor >= 1.0 / max_dim) {
            throw std::invalid_argument(origin + ": rank_floor must lie in (0, 1/max-dim)");
        }
    } else {
        if (config.n_qubits.empty()) {
            throw std::invalid_argument(origin + ": this experiment requires 'n_qubits'");
        }
        for (int n : config.n_qubits) {
            if (n < 1 || n > 8) {
                throw std::invalid_argument(origin + ": n_qubits must lie in [1, 8]");
            }
        }
    }
    return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_json(buffer.str(), path.string());
}

std::string config_to_json(const ExperimentConfig& config) {
    nlohmann::json doc;
    doc["experiment"] = to_string(config.experiment);
    doc["seed"] = config.seed;
    if (!config.dims.empty()) {
        doc["dims"] = config.dims;
    }
    if (!config.n_qubits.empty()) {
        doc["n_qubits"] = config.n_qubits;
    }
    doc["samples"] = config.samples;
    doc["rank_floor"] = config.rank_floor;
    if (!config.tolerance_overrides.empty()) {
        doc["tolerance_overrides"] = config.tolerance_overrides;
    }
    doc["output_dir"] = config.output_dir.string();
    doc["format"] = config.format == ExperimentConfig::Format::kCsv ? "csv" : "json";
    return doc.dump(2);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ContinuitySweepResult continuity_sweep(const std::vector<int>& dims, long samples,
                                       double rank_floor, std::uint64_t seed) {
    static const double kEps[] = {1e-1, 3.162277660168379e-2, 1e-2, 3.162277660168379e-3,
                                  1e-3, 3.162277660168379e-4, 1e-4};
    const long n_eps = static_cast<long>(std::size(kEps));
    const long per_sample = 2 * n_eps;  // convergent + counterpoint rows
    const long n_dims = static_cast<long>(dims.size());
    const long total = n_dims * samples;

    ContinuitySweepResult result;
    result.rows.resize(static_cast<std::size_t>(total * per_sample));
    result.summaries.resize(static_cast<std::size_t>(total));

    parallel_for(total, [&](long g) {
        const int dim = dims[static_cast<std::size_t>(g / samples)];
        const long sample = g % samples;
        const std::uint64_t base =
            derive_seed(seed, static_cast<std::uint64_t>(dim), static_cast<std::uint64_t>(sample));

        const DensityMatrix sigma = sample_full_rank_density(dim, rank_floor, derive_seed(base, 1, 0));
        const TangentState t_sigma = sample_tangent(sigma, 1.0, derive_seed(base, 2, 0));
        const DensityMatrix tau = sample_full_rank_density(dim, rank_floor, derive_seed(base, 3, 0));

        // Fixed derivative offset; resampled (deterministically) if the
        // counterpoint limit degenerates.
        const double fq_sigma = qfi(t_sigma);
        Eigen::MatrixXcd k_dir;
        double limit = 0.0;
        for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
            const TangentState probe = sample_tangent(sigma, 1.0, derive_seed(base, 4, attempt));
            k_dir = probe.drho.matrix();
            const TangentState shifted{sigma,
                                       HermitianOperator(t_sigma.drho.matrix() + k_dir)};
            limit = std::abs(qfi(shifted) - fq_sigma);
            if (limit > 1e-3) {
                break;
            }
        }

        ContinuitySummary summary;
        summary.dim = dim;
        summary.sample = sample;
        summary.counterpoint_limit = limit;

        std::vector<double> eps_list;
        std::vector<double> lhs_conv;
        std::vector<double> rhs_conv;

        for (long e = 0; e < n_eps; ++e) {
            const double eps = kEps[static_cast<std::size_t>(e)];
            Eigen::MatrixXcd rho_eps =
                (1.0 - eps) * sigma.matrix() + eps * tau.matrix();
            rho_eps = 0.5 * (rho_eps + rho_eps.adjoint()).eval();
            const DensityMatrix rho{HermitianOperator(std::move(rho_eps))};

            // Convergent family: derivative offset shrinks with eps.
            const TangentState t_conv{
                rho, HermitianOperator(t_sigma.drho.matrix() + eps * k_dir)};
            BoundReport conv = qfi_continuity_bound(t_conv, t_sigma);
            conv.context["eps"] = eps;
            conv.context["family"] = 0.0;
            eps_list.push_back(eps);
            lhs_conv.push_back(conv.lhs);
            rhs_conv.push_back(conv.rhs);

            // Counterpoint: states converge, derivative gap stays fixed.
            const TangentState t_cp{rho,
                                    HermitianOperator(t_sigma.drho.matrix() + k_dir)};
            BoundReport cp = qfi_continuity_bound(t_cp, t_sigma);
            cp.context["eps"] = eps;
            cp.context["family"] = 1.0;
            if (e == n_eps - 1) {
                summary.counterpoint_lhs_small_eps = cp.lhs;
            }

            ReportRow& row_conv =
                result.rows[static_cast<std::size_t>(g * per_sample + 2 * e)];
            row_conv = {"continuity-sweep", sample, base, dim, std::move(conv)};
            ReportRow& row_cp =
                result.rows[static_cast<std::size_t>(g * per_sample + 2 * e + 1)];
            row_cp = {"continuity-sweep", sample, base, dim, std::move(cp)};
        }

        // Slope over the four smallest eps values.
        const std::size_t tail = 4;
        std::vector<double> ex(eps_list.end() - tail, eps_list.end());
        std::vector<double> ly(lhs_conv.end() - tail, lhs_conv.end());
        std::vector<double> ry(rhs_conv.end() - tail, rhs_conv.end());
        summary.slope_lhs = loglog_slope(ex, ly);
        summary.slope_rhs = loglog_slope(ex, ry);
        result.summaries[static_cast<std::size_t>(g)] = summary;
    });

    return result;
}

namespace {

KLocalHamiltonian ghz_hamiltonian(int n_qubits, int k) {
    std::vector<KLocalTerm> terms;
    if (k == 1) {
        const HermitianOperator half_z{Eigen::MatrixXcd(0.5 * pauli_z())};
        for (int j = 0; j < n_qubits; ++j) {
            terms.push_back({{j}, half_z});
        }
    } else if (k == 2) {
        const Eigen::MatrixXcd xx =
            0.25 * kronecker(Eigen::MatrixXcd(pauli_x()), Eigen::MatrixXcd(pauli_x()));
        const HermitianOperator quarter_xx{xx};
        for (int i = 0; i < n_qubits; ++i) {
            for (int j = i + 1; j < n_qubits; ++j) {
                terms.push_back({{i, j}, quarter_xx});
            }
        }
    } else {
        throw std::invalid_argument("ghz_hamiltonian: k must be 1 or 2");
    }
    return KLocalHamiltonian(n_qubits, 2, k, std::move(terms));
}

/// Per-site 1-local generator variance oracle for alpha_Q: the largest
/// single-site QFI over ansatz components and sites.
double alpha_q_from_ansatz(const SeparableAnsatz& ansatz, const KLocalHamiltonian& h) {
    std::vector<Eigen::MatrixXcd> site_ops(static_cast<std::size_t>(h.n_sites()),
                                           Eigen::MatrixXcd::Zero(h.local_dim(), h.local_dim()));
    for (const auto& term : h.terms()) {
        site_ops[static_cast<std::size_t>(term.sites[0])] += term.op.matrix();
    }
    double alpha_q = 0.0;
    for (int a = 0; a < ansatz.n_components(); ++a) {
        if (ansatz.weights()(a) <= 0.0) {
            continue;
        }
        for (int j = 0; j < ansatz.n_sites(); ++j) {
            const auto& phi = ansatz.factors()[static_cast<std::size_t>(a)]
                                             [static_cast<std::size_t>(j)];
            const auto& op = site_ops[static_cast<std::size_t>(j)];
            const double mean = (phi.adjoint() * op * phi)(0, 0).real();
            const double second = (phi.adjoint() * op * op * phi)(0, 0).real();
            alpha_q = std::max(alpha_q, 4.0 * (second - mean * mean));
        }
    }
    return alpha_q;
}

}  // namespace

GhzPipelineResult ghz_pipeline(int n_qubits, int k, double gamma, std::uint64_t seed,
                               int restarts) {
    if (n_qubits < 2 || n_qubits > 8) {
        throw std::invalid_argument("ghz_pipeline: n_qubits must lie in [2, 8]");
    }
    if (gamma <= 0.0 || gamma >= 1.0) {
        throw std::invalid_argument("ghz_pipeline: gamma must lie in (0, 1)");
    }
    const long dim = 1L << n_qubits;
    const Eigen::VectorXcd psi = ghz_vector(n_qubits);
    Eigen::MatrixXcd rho_mat =
        (1.0 - gamma) * (psi * psi.adjoint()) +
        (gamma / static_cast<double>(dim)) * Eigen::MatrixXcd::Identity(dim, dim);
    rho_mat = 0.5 * (rho_mat + rho_mat.adjoint()).eval();
    const DensityMatrix rho{HermitianOperator(std::move(rho_mat))};

    const KLocalHamiltonian ham = ghz_hamiltonian(n_qubits, k);
    const HermitianOperator h_global = assemble_klocal(ham);
    const TangentState t_rho = phase_channel(rho, h_global, 0.0);

    const SeparableSearchResult search = closest_separable(
        rho, n_qubits, 2, /*n_components=*/-1, restarts, derive_seed(seed, 0x5E, 0));
    const SeparableAnsatz floored = search.ansatz.mixed_with_identity(gamma);
    const DensityMatrix sigma = floored.assemble();
    const double fid = fidelity(rho, sigma);
    const double eg = std::max(0.0, 1.0 - fid * fid);
    const TangentState t_sigma = phase_channel(sigma, h_global, 0.0);
    const double nu = nu_factor(rho, sigma);
    const double h_inf = schatten_norm(h_global, kInf);
    const double fq_sigma = qfi(t_sigma);

    double alpha_c = 0.0;
    double alpha_q = 0.0;
    bool measured_alpha = false;
    if (k == 1) {
        // Weights are x-independent under a product-preserving evolution,
        // so the classical term vanishes and alpha_Q comes from the
        // per-site generators.
        alpha_q = alpha_q_from_ansatz(floored, ham);
    } else {
        // A k >= 2 unitary does not preserve productness, so no per-site
        // extraction exists; use the measured separable QFI instead.
        alpha_q = fq_sigma / static_cast<double>(n_qubits);
        measured_alpha = true;
    }
    const ScalingBoundParams params = ScalingBoundParams::make(alpha_c, alpha_q, ham);

    GhzPipelineResult result;
    result.n_qubits = n_qubits;
    result.k = k;
    result.gamma = gamma;
    result.eg = eg;
    result.nu = nu;
    result.fq_rho = qfi(t_rho);
    result.fq_sigma = fq_sigma;
    result.h_inf = h_inf;
    result.alpha_cq = params.alpha_cq;
    result.alpha_from_measured_fq = measured_alpha;

    result.reports.push_back(eg_trace_bound_check(rho, floored));
    result.reports.push_back(eg_qfi_bound(t_rho, t_sigma, eg));
    result.reports.push_back(sld_entanglement_bound(t_rho, t_sigma, h_inf, eg));
    std::vector<BoundReport> scaling =
        scaling_bound(t_rho, ham, params, eg, nu, fq_sigma);
    for (auto& report : scaling) {
        result.reports.push_back(std::move(report));
    }
    for (auto& report : result.reports) {
        report.context["n_sites"] = static_cast<double>(n_qubits);
        report.context["k"] = static_cast<double>(k);
        report.context["gamma"] = gamma;
        report.context["alpha_from_measured_fq"] = measured_alpha ? 1.0 : 0.0;
        report.context["separable_fidelity"] = fid;
        report.context["fq_sigma_vs_alpha_slack"] =
            params.alpha_cq * n_qubits - fq_sigma;
    }
    return result;
}

std::vector<ScalingRow> scaling_sweep_rows(const std::vector<int>& n_qubits,
                                           const std::vector<int>& k_values, double gamma,
                                           std::uint64_t seed) {
    std::vector<ScalingRow> rows;
    for (int n : n_qubits) {
        if ((1L << n) > 256) {
            throw std::invalid_argument("scaling_sweep: dense dimension above 256");
        }
        // Pure-GHZ reference under the 1-local Hamiltonian: 4 Var(H) = N^2.
        const Eigen::VectorXcd psi = ghz_vector(n);
        const HermitianOperator h1 = assemble_klocal(ghz_hamiltonian(n, 1));
        const Eigen::VectorXcd dpsi = Complex(0.0, -1.0) * (h1.matrix() * psi);
        const double pure_ref = qfi_pure_oracle(psi, dpsi);

        for (int k : k_values) {
            const GhzPipelineResult pipe =
                ghz_pipeline(n, k, gamma, derive_seed(seed, static_cast<std::uint64_t>(k),
                                                      static_cast<std::uint64_t>(n)));
            ScalingRow row;
            row.n_qubits = n;
            row.k = k;
            row.fq = pipe.fq_rho;
            row.eg = pipe.eg;
            row.nu = pipe.nu;
            row.fq_pure_ref = pure_ref;
            for (const auto& report : pipe.reports) {
                if (report.bound_id == "scaling-v1") {
                    row.rhs1 = report.rhs;
                    row.sat1 = report.satisfied;
                } else if (report.bound_id == "scaling-v2") {
                    row.rhs2 = report.rhs;
                    row.sat2 = report.satisfied;
                } else if (report.bound_id == "scaling-v3") {
                    row.rhs3 = report.rhs;
                    row.sat3 = report.satisfied;
                }
            }
            rows.push_back(row);
        }
    }
    return rows;
}

namespace {

std::string scaling_rows_csv(const std::vector<ScalingRow>& rows) {
    std::ostringstream out;
    out << "n_qubits,k,fq,rhs1,rhs2,rhs3,eg,nu,fq_pure_ref,sat1,sat2,sat3\n";
    for (const auto& r : rows) {
        out << r.n_qubits << ',' << r.k << ',' << format_double(r.fq) << ','
            << format_double(r.rhs1) << ',' << format_double(r.rhs2) << ','
            << format_double(r.rhs3) << ',' << format_double(r.eg) << ','
            << format_double(r.nu) << ',' << format_double(r.fq_pure_ref) << ','
            << (r.sat1 ? 1 : 0) << ',' << (r.sat2 ? 1 : 0) << ',' << (r.sat3 ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string typicality_rows_csv(const std::vector<TypicalityRow>& rows) {
    std::ostringstream out;
    out << "n_qubits,samples,mean_eg,p05_eg,min_eg,max_eg\n";
    for (const auto& r : rows) {
        out << r.n_qubits << ',' << r.samples << ',' << format_double(r.mean_eg) << ','
            << format_double(r.p05_eg) << ',' << format_double(r.min_eg) << ','
            << format_double(r.max_eg) << '\n';
    }
    return out.str();
}

std::string continuity_summaries_json(const std::vector<ContinuitySummary>& summaries) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : summaries) {
        nlohmann::json obj;
        obj["dim"] = s.dim;
        obj["sample"] = s.sample;
        obj["slope_lhs"] = s.slope_lhs;
        obj["slope_rhs"] = s.slope_rhs;
        obj["counterpoint_limit"] = s.counterpoint_limit;
        obj["counterpoint_lhs_small_eps"] = s.counterpoint_lhs_small_eps;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::vector<ReportRow> entanglement_suite_rows(const ExperimentConfig& config) {
    std::vector<ReportRow> rows;

    // Closed-form pure-state anchors.
    struct Anchor {
        const char* name;
        Eigen::VectorXcd psi;
        int n_sites;
        double expected;
        double tolerance;
    };
    std::vector<Anchor> anchors;
    {
        Eigen::VectorXcd product = Eigen::VectorXcd::Zero(4);
        product(0) = 1.0;
        anchors.push_back({"product", product, 2, 0.0, 1e-10});
        anchors.push_back({"bell", ghz_vector(2), 2, 0.5, 1e-6});
        Eigen::VectorXcd w = Eigen::VectorXcd::Zero(8);
        w(1) = w(2) = w(4) = 1.0 / std::sqrt(3.0);
        anchors.push_back({"w3", w, 3, 5.0 / 9.0, 1e-6});
    }
    for (const auto& anchor : anchors) {
        const EgResult eg =
            eg_pure(anchor.psi, anchor.n_sites, 2, 32, derive_seed(config.seed, 0xA0, 0));
        BoundReport report =
            make_report("eg-anchor", std::abs(eg.eg - anchor.expected), anchor.tolerance,
                        {{"measured_eg", eg.eg},
                         {"expected_eg", anchor.expected},
                         {"converged", eg.converged ? 1.0 : 0.0}});
        rows.push_back({"entanglement-suite", 0, config.seed, 1 << anchor.n_sites,
                        std::move(report)});
    }

    // Oracle agreement on two-qubit Haar states.
    const long agreement_samples = std::max<long>(config.samples, 0);
    std::vector<ReportRow> agreement(static_cast<std::size_t>(agreement_samples));
    parallel_for(agreement_samples, [&](long i) {
        const std::uint64_t s = derive_seed(config.seed, 0xB0, static_cast<std::uint64_t>(i));
        const Eigen::VectorXcd psi = sample_haar_vector(4, s);
        const double via_als = eg_pure(psi, 2, 2, 32, derive_seed(s, 1, 0)).eg;
        const double via_grid = eg_brute(psi, 60);
        BoundReport report = make_report("eg-agreement", std::abs(via_als - via_grid), 0.01,
                                         {{"eg_als", via_als}, {"eg_grid", via_grid}});
        agreement[static_cast<std::size_t>(i)] = {"entanglement-suite", i, s, 4,
                                                  std::move(report)};
    });
    rows.insert(rows.end(), agreement.begin(), agreement.end());

    // Floored-GHZ pipelines.
    for (int n : config.n_qubits) {
        if (n < 2) {
            continue;
        }
        for (int k : {1, 2}) {
            const GhzPipelineResult pipe =
                ghz_pipeline(n, k, kPipelineGamma,
                             derive_seed(config.seed, static_cast<std::uint64_t>(k),
                                         static_cast<std::uint64_t>(n)));
            for (const auto& report : pipe.reports) {
                rows.push_back({"entanglement-suite", n, config.seed, 1 << n, report});
            }
        }
    }
    return rows;
}

}  // namespace

std::string manifest_to_json(const RunManifest& manifest) {
    nlohmann::json doc;
    doc["version"] = manifest.version;
    doc["config"] = nlohmann::json::parse(manifest.config_json);
    nlohmann::json experiments = nlohmann::json::array();
    for (const auto& e : manifest.experiments) {
        nlohmann::json obj;
        obj["name"] = e.name;
        obj["rows"] = e.rows;
        obj["violations"] = e.violations;
        obj["min_slack"] = e.min_slack;
        obj["wall_time_s"] = e.wall_time_s;
        experiments.push_back(std::move(obj));
    }
    doc["experiments"] = std::move(experiments);
    doc["files"] = manifest.file_checksums;
    doc["total_violations"] = manifest.total_violations;
    return doc.dump(2) + "\n";
}

RunManifest run(const ExperimentConfig& config) {
    namespace fs = std::filesystem;
    fs::create_directories(config.output_dir);

    RunManifest manifest;
    manifest.version = kVersion;
    manifest.config_json = config_to_json(config);

    const auto start = std::chrono::steady_clock::now();
    const std::string ext = config.format == ExperimentConfig::Format::kCsv ? ".csv" : ".json";

    std::map<std::string, std::string> files;  // name -> contents
    long violations = 0;
    long row_count = 0;
    double slack_floor = 0.0;

    switch (config.experiment) {
        case Experiment::kBoundSuite:
        case Experiment::kUnitarySuite: {
            BatchConfig batch;
            batch.seed = config.seed;
            batch.dims = config.dims;
            batch.samples = config.samples;
            batch.lambda_floor = config.rank_floor;
            batch.full_rank_floor =
                get_override(config, "full_rank_floor", kFullRankFloor);
            batch.experiment = to_string(config.experiment);
            batch.bound_ids = config.experiment == Experiment::kUnitarySuite
                                  ? unitary_suite_ids()
                                  : default_bound_suite_ids();
            const std::vector<ReportRow> rows = batch_verify(batch);
            files["reports" + ext] = reports_to_string(rows, config.format);
            files["summary.json"] = summary_to_json(summarize_reports(rows));
            violations = count_violations(rows);
            row_count = static_cast<long>(rows.size());
            slack_floor = min_slack(rows);
            break;
        }
        case Experiment::kContinuitySweep: {
            const ContinuitySweepResult sweep =
                continuity_sweep(config.dims, config.samples, config.rank_floor, config.seed);
            files["reports" + ext] = reports_to_string(sweep.rows, config.format);
            files["summary.json"] = summary_to_json(summarize_reports(sweep.rows));
            files["continuity_summary.json"] = continuity_summaries_json(sweep.summaries);
            violations = count_violations(sweep.rows);
            row_count = static_cast<long>(sweep.rows.size());
            slack_floor = min_slack(sweep.rows);
            break;
        }
        case Experiment::kEntanglementSuite: {
            const std::vector<ReportRow> rows = entanglement_suite_rows(config);
            files["reports" + ext] = reports_to_string(rows, config.format);
            files["summary.json"] = summary_to_json(summarize_reports(rows));
            violations = count_violations(rows);
            row_count = static_cast<long>(rows.size());
            slack_floor = min_slack(rows);
            break;
        }
        case Experiment::kScalingSweep: {
            const std::vector<ScalingRow> rows =
                scaling_sweep_rows(config.n_qubits, {1, 2}, kPipelineGamma, config.seed);
            files["scaling.csv"] = scaling_rows_csv(rows);
            row_count = static_cast<long>(rows.size());
            slack_floor = kInf;
            for (const auto& r : rows) {
                if (!r.sat1 || !r.sat2 || !r.sat3) {
                    ++violations;
                }
                slack_floor = std::min({slack_floor, r.rhs1 - r.fq, r.rhs2 - r.fq,
                                        r.rhs3 - r.fq});
            }
            if (rows.empty()) {
                slack_floor = 0.0;
            }
            break;
        }
        case Experiment::kTypicality: {
            const std::vector<TypicalityRow> rows = typicality_sweep(
                config.n_qubits, static_cast<int>(config.samples), config.seed);
            files["typicality.csv"] = typicality_rows_csv(rows);
            row_count = static_cast<long>(rows.size());
            break;
        }
    }

    for (const auto& [name, contents] : files) {
        write_file(config.output_dir / name, contents);
        manifest.file_checksums[name] = fnv1a_hex(contents);
    }

    const auto stop = std::chrono::steady_clock::now();
    ExperimentSummary summary;
    summary.name = to_string(config.experiment);
    summary.rows = row_count;
    summary.violations = violations;
    summary.min_slack = slack_floor;
    summary.wall_time_s = std::chrono::duration<double>(stop - start).count();
    manifest.experiments.push_back(summary);
    manifest.total_violations = violations;

    write_file(config.output_dir / "manifest.json", manifest_to_json(manifest));
    return manifest;
}

}  // namespace qfib
