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

#include "qfib/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>

#include <json.hpp>

namespace qfib {

double satisfaction_tol(double rhs, double tol_floor) {
    if (std::isinf(rhs)) {
        return 0.0;
    }
    return tol_floor * std::max(1.0, std::abs(rhs));
}

BoundReport make_report(std::string bound_id, double lhs, double rhs,
                        std::map<std::string, double> context, double tol_floor) {
    BoundReport report;
    report.bound_id = std::move(bound_id);
    report.lhs = lhs;
    report.rhs = rhs;
    report.slack = rhs - lhs;
    report.satisfied = std::isinf(rhs) ? rhs > 0 : lhs <= rhs + satisfaction_tol(rhs, tol_floor);
    report.context = std::move(context);
    return report;
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> context_columns(const std::vector<ReportRow>& rows) {
    std::set<std::string> keys;
    for (const auto& row : rows) {
        for (const auto& [key, value] : row.report.context) {
            keys.insert(key);
        }
    }
    return {keys.begin(), keys.end()};
}

}  // namespace

void write_reports_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    const std::vector<std::string> extra = context_columns(rows);
    out << "bound_id,experiment,sample_index,seed,dim,lhs,rhs,slack,satisfied";
    for (const auto& key : extra) {
        out << ',' << key;
    }
    out << '\n';
    for (const auto& row : rows) {
        out << row.report.bound_id << ',' << row.experiment << ',' << row.sample_index << ','
            << row.sample_seed << ',' << row.dim << ',' << format_double(row.report.lhs) << ','
            << format_double(row.report.rhs) << ',' << format_double(row.report.slack) << ','
            << (row.report.satisfied ? '1' : '0');
        for (const auto& key : extra) {
            out << ',';
            const auto it = row.report.context.find(key);
            if (it != row.report.context.end()) {
                out << format_double(it->second);
            }
        }
        out << '\n';
    }
}

void write_reports_json(std::ostream& out, const std::vector<ReportRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj;
        obj["bound_id"] = row.report.bound_id;
        obj["experiment"] = row.experiment;
        obj["sample_index"] = row.sample_index;
        obj["seed"] = row.sample_seed;
        obj["dim"] = row.dim;
        obj["lhs"] = row.report.lhs;
        obj["rhs"] = row.report.rhs;
        obj["slack"] = row.report.slack;
        obj["satisfied"] = row.report.satisfied;
        nlohmann::json ctx;
        for (const auto& [key, value] : row.report.context) {
            ctx[key] = value;
        }
        obj["context"] = std::move(ctx);
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

std::map<std::string, BoundSummary> summarize_reports(const std::vector<ReportRow>& rows) {
    std::map<std::string, std::vector<double>> slacks;
    std::map<std::string, long> violations;
    for (const auto& row : rows) {
        slacks[row.report.bound_id].push_back(row.report.slack);
        violations[row.report.bound_id] += row.report.satisfied ? 0 : 1;
    }
    std::map<std::string, BoundSummary> result;
    for (auto& [id, values] : slacks) {
        std::sort(values.begin(), values.end());
        BoundSummary s;
        s.count = static_cast<long>(values.size());
        s.violations = violations[id];
        s.min_slack = values.front();
        s.slack_p05 = values[static_cast<std::size_t>(0.05 * (values.size() - 1))];
        s.slack_median = values[values.size() / 2];
        result[id] = s;
    }
    return result;
}

std::string summary_to_json(const std::map<std::string, BoundSummary>& summary) {
    nlohmann::json doc;
    long total_violations = 0;
    long total_rows = 0;
    nlohmann::json per_bound;
    for (const auto& [id, s] : summary) {
        nlohmann::json obj;
        obj["count"] = s.count;
        obj["violations"] = s.violations;
        obj["min_slack"] = s.min_slack;
        obj["slack_p05"] = s.slack_p05;
        obj["slack_median"] = s.slack_median;
        per_bound[id] = std::move(obj);
        total_violations += s.violations;
        total_rows += s.count;
    }
    doc["bounds"] = std::move(per_bound);
    doc["total_rows"] = total_rows;
    doc["total_violations"] = total_violations;
    return doc.dump(2) + "\n";
}

long count_violations(const std::vector<ReportRow>& rows) {
    long n = 0;
    for (const auto& row : rows) {
        if (!row.report.satisfied) {
            ++n;
        }
    }
    return n;
}

}  // namespace qfib
