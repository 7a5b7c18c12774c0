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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qfib/bounds.hpp"
#include "qfib/harness.hpp"
#include "qfib/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"quantum Fisher information bound certification harness"};
    app.set_version_flag("--version", std::string(qfib::kVersion));
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "execute an experiment from a JSON config");
    std::string config_path;
    run_cmd->add_option("--config", config_path, "experiment config file")->required();
    std::uint64_t seed = 0;
    bool seed_set = false;
    run_cmd->add_option("--seed", seed, "override the config seed")
        ->each([&](const std::string&) { seed_set = true; });
    long samples = 0;
    bool samples_set = false;
    run_cmd->add_option("--samples", samples, "override the config sample count")
        ->each([&](const std::string&) { samples_set = true; });
    std::string out_dir;
    run_cmd->add_option("--out", out_dir, "override the config output directory");
    std::string format;
    run_cmd->add_option("--format", format, "override the report format (csv|json)")
        ->check(CLI::IsMember({"csv", "json"}));

    // list-bounds
    auto* list_cmd = app.add_subcommand("list-bounds", "print the bound-id catalog");

    CLI11_PARSE(app, argc, argv);

    if (list_cmd->parsed()) {
        for (const auto& entry : qfib::bound_catalog()) {
            std::cout << entry.id << "\n    " << entry.description << "\n";
        }
        return 0;
    }

    try {
        qfib::ExperimentConfig config = qfib::load_config(config_path);
        if (seed_set) {
            config.seed = seed;
        }
        if (samples_set) {
            config.samples = samples;
        }
        if (!out_dir.empty()) {
            config.output_dir = out_dir;
        }
        if (!format.empty()) {
            config.format = format == "csv" ? qfib::ExperimentConfig::Format::kCsv
                                            : qfib::ExperimentConfig::Format::kJson;
        }

        const qfib::RunManifest manifest = qfib::run(config);
        for (const auto& e : manifest.experiments) {
            std::cout << e.name << ": rows=" << e.rows << " violations=" << e.violations
                      << " min_slack=" << qfib::format_double(e.min_slack)
                      << " wall_time_s=" << qfib::format_double(e.wall_time_s) << "\n";
        }
        std::cout << "manifest: " << (config.output_dir / "manifest.json").string() << "\n";
        if (manifest.total_violations > 0) {
            std::cerr << "FAIL: " << manifest.total_violations << " bound violation(s)\n";
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
