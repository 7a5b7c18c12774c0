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
 * Experiment harness: configuration parsing, the six named experiments,
 * report emission, and the run manifest.
 *
 * A run executes one experiment from a JSON config, writes reports plus a
 * summary and manifest into the output directory, and reports violations.
 * Identical config and seed produce byte-identical report files; the
 * manifest additionally carries wall times, which are excluded from any
 * determinism claim.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qfib/bounds.hpp"
#include "qfib/entanglement.hpp"
#include "qfib/report.hpp"

namespace qfib {

enum class Experiment {
    kBoundSuite,
    kContinuitySweep,
    kUnitarySuite,
    kEntanglementSuite,
    kScalingSweep,
    kTypicality,
};

std::string to_string(Experiment e);
Experiment experiment_from_string(const std::string& name);

struct ExperimentConfig {
    Experiment experiment = Experiment::kBoundSuite;
    std::uint64_t seed = 0;
    std::vector<int> dims;      ///< bound-suite, continuity-sweep, unitary-suite
    std::vector<int> n_qubits;  ///< entanglement-suite, scaling-sweep, typicality
    long samples = 0;
    double rank_floor = 1e-2;   ///< ensemble smallest-eigenvalue floor
    std::map<std::string, double> tolerance_overrides;  ///< known: full_rank_floor
    std::filesystem::path output_dir = "qfibounds-out";
    enum class Format { kCsv, kJson } format = Format::kCsv;
};

/// Strict parse: unknown keys (top-level or inside tolerance_overrides)
/// are rejected; parse errors carry the origin and byte offset.
ExperimentConfig parse_config_json(const std::string& text, const std::string& origin);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const ExperimentConfig& config);

struct ExperimentSummary {
    std::string name;
    long rows = 0;
    long violations = 0;
    double min_slack = 0.0;
    double wall_time_s = 0.0;
};

struct RunManifest {
    std::string version;
    std::string config_json;
    std::vector<ExperimentSummary> experiments;
    std::map<std::string, std::string> file_checksums;  ///< path -> fnv1a64 hex
    long total_violations = 0;
};

std::string manifest_to_json(const RunManifest& manifest);

/// Executes the configured experiment and writes reports, summary, and
/// manifest.json under output_dir. Violations do not throw; they are
/// reported (the CLI turns them into a nonzero exit status).
RunManifest run(const ExperimentConfig& config);

/// 64-bit FNV-1a of a byte string, as "fnv1a:<hex>".
std::string fnv1a_hex(const std::string& bytes);

// --- experiment building blocks, exposed for tests and the acceptance
// suite ---

struct ContinuitySummary {
    int dim = 0;
    long sample = 0;
    double slope_lhs = 0.0;          ///< log-log slope, convergent family
    double slope_rhs = 0.0;
    double counterpoint_limit = 0.0; ///< |F^Q(sigma, dsigma+K) - F^Q(sigma, dsigma)|
    double counterpoint_lhs_small_eps = 0.0;  ///< lhs at the smallest eps
};

struct ContinuitySweepResult {
    std::vector<ReportRow> rows;  ///< qfi-continuity reports, context: eps, family
    std::vector<ContinuitySummary> summaries;
};

/// Two one-parameter families per sample: a convergent family where both
/// the states and the derivatives approach the base pair (both sides of
/// the continuity bound vanish, lhs of order eps), and a counterpoint
/// where only the states converge while the derivative gap stays fixed
/// (lhs stays bounded away from zero).
ContinuitySweepResult continuity_sweep(const std::vector<int>& dims, long samples,
                                       double rank_floor, std::uint64_t seed);

/// One floored-GHZ pipeline instance: probe (1-gamma)|GHZ><GHZ| + gamma I/d
/// under a k-local Hamiltonian, see-saw closest separable state floored
/// with the same gamma, and every entanglement bound evaluated on the pair.
struct GhzPipelineResult {
    int n_qubits = 0;
    int k = 1;
    double gamma = 0.0;
    double eg = 0.0;
    double nu = 0.0;
    double fq_rho = 0.0;
    double fq_sigma = 0.0;
    double h_inf = 0.0;
    double alpha_cq = 0.0;
    bool alpha_from_measured_fq = false;
    std::vector<BoundReport> reports;
};

GhzPipelineResult ghz_pipeline(int n_qubits, int k, double gamma, std::uint64_t seed,
                               int restarts = 6);

struct ScalingRow {
    int n_qubits = 0;
    int k = 1;
    double fq = 0.0;
    double rhs1 = 0.0;
    double rhs2 = 0.0;
    double rhs3 = 0.0;
    double eg = 0.0;
    double nu = 0.0;
    double fq_pure_ref = 0.0;  ///< N^2: pure-GHZ oracle under the 1-local H
    bool sat1 = false;
    bool sat2 = false;
    bool sat3 = false;
};

std::vector<ScalingRow> scaling_sweep_rows(const std::vector<int>& n_qubits,
                                           const std::vector<int>& k_values, double gamma,
                                           std::uint64_t seed);

/// GHZ mixing weight used by the entanglement pipelines.
inline constexpr double kPipelineGamma = 0.05;

}  // namespace qfib
