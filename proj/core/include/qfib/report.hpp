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
 * Structured inequality reports and their CSV/JSON serialization.
 *
 * Every bound evaluator returns a BoundReport: the two sides of the
 * inequality, the slack rhs - lhs, a satisfied flag, and the named scalars
 * that entered the bound (smallest eigenvalues, norms, conditioning
 * factors). Two-sided checks put the upper stage in lhs/rhs and the lower
 * stage in the context; `satisfied` covers the whole chain.
 *
 * Numbers serialize with the shortest round-trip representation
 * (std::to_chars), so identical runs produce byte-identical files.
 */

#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace qfib {

/// Relative satisfaction tolerance with an absolute floor:
/// tol = floor * max(1, |rhs|).
double satisfaction_tol(double rhs, double tol_floor = 1e-9);

struct BoundReport {
    std::string bound_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  ///< rhs - lhs; +inf when rhs is +inf.
    bool satisfied = false;
    std::map<std::string, double> context;
};

/// Builds a report with slack and satisfied filled in
/// (satisfied <=> lhs <= rhs + satisfaction_tol(rhs, tol_floor)).
BoundReport make_report(std::string bound_id, double lhs, double rhs,
                        std::map<std::string, double> context = {},
                        double tol_floor = 1e-9);

/// One batch-run row: a report tagged with its sample provenance.
struct ReportRow {
    std::string experiment;
    long sample_index = 0;
    std::uint64_t sample_seed = 0;
    int dim = 0;
    BoundReport report;
};

/// Shortest round-trip decimal representation (locale-independent).
std::string format_double(double v);

/// CSV with fixed columns bound_id, experiment, sample_index, seed, dim,
/// lhs, rhs, slack, satisfied followed by the sorted union of context keys
/// over all rows (missing values empty).
void write_reports_csv(std::ostream& out, const std::vector<ReportRow>& rows);

/// Same rows as a JSON array (one object per row).
void write_reports_json(std::ostream& out, const std::vector<ReportRow>& rows);

struct BoundSummary {
    long count = 0;
    long violations = 0;
    double min_slack = 0.0;
    double slack_p05 = 0.0;
    double slack_median = 0.0;
};

/// Per-bound-id slack statistics; key order is deterministic.
std::map<std::string, BoundSummary> summarize_reports(const std::vector<ReportRow>& rows);

/// Summary as a JSON document string.
std::string summary_to_json(const std::map<std::string, BoundSummary>& summary);

long count_violations(const std::vector<ReportRow>& rows);

}  // namespace qfib
