// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

// distill: run distillation scenarios and self-check suites.

#include "supersinglet/experiment.hpp"
#include "supersinglet/validation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

namespace ss = supersinglet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAbort = 2;

struct RunOptions {
    std::string scenario;
    std::string config_file;
    std::optional<int> n;
    std::optional<int> iterations;
    std::optional<double> epsilon;
    std::optional<double> delta;
    std::optional<std::string> engine;
    bool twirl_each_iteration = false;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string plot;
};

std::string number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// out.csv -> out_delta0.1.csv
std::filesystem::path with_suffix(const std::filesystem::path& p, double delta) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "_delta%g", delta);
    return p.parent_path() / (p.stem().string() + buf + p.extension().string());
}

int run_one(const std::string& scenario, const ss::Overrides& overrides,
            const std::filesystem::path& out, const std::filesystem::path& plot) {
    const ss::ScenarioResult result = ss::run_scenario(scenario, overrides);
    ss::write_csv(result.records, out);
    if (!plot.empty() && !result.records.empty()) ss::emit_plot(result, plot);
    if (result.abort_reason) {
        std::cerr << "distill: engine abort after " << result.records.size()
                  << " records: " << *result.abort_reason << "\n";
        return kExitAbort;
    }
    const auto& last = result.records.back();
    std::printf("%s: N=%d engine=%s iterations=%d final fidelity %.12f (%.2f s) -> %s\n",
                scenario.c_str(), result.config.n_qubits,
                std::string(ss::to_string(last.engine)).c_str(), last.iteration, last.fidelity,
                result.wall_time.count(), out.string().c_str());
    return kExitOk;
}

int run_command(const RunOptions& o) {
    ss::Overrides overrides;
    if (!o.config_file.empty()) overrides = ss::parse_config_file(o.config_file);
    // flags win over the config file
    if (o.n) overrides["n_qubits"] = std::to_string(*o.n);
    if (o.iterations) overrides["iterations"] = std::to_string(*o.iterations);
    if (o.epsilon) overrides["epsilon"] = number(*o.epsilon);
    if (o.delta) overrides["delta"] = number(*o.delta);
    if (o.engine) overrides["engine"] = *o.engine;
    if (o.twirl_each_iteration) overrides["twirl_each_iteration"] = "true";
    if (o.seed) overrides["seed"] = std::to_string(*o.seed);
    if (overrides.count("n")) {
        overrides.try_emplace("n_qubits", overrides["n"]);
        overrides.erase("n");
    }

    if (o.scenario == "fig2d" && !overrides.count("delta")) {
        int status = kExitOk;
        for (double delta : ss::fig2d_default_deltas()) {
            ss::Overrides one = overrides;
            one["delta"] = number(delta);
            const auto plot = o.plot.empty() ? std::filesystem::path{} : with_suffix(o.plot, delta);
            status = std::max(status, run_one(o.scenario, one, with_suffix(o.out, delta), plot));
        }
        return status;
    }
    return run_one(o.scenario, overrides, o.out, o.plot);
}

int validate_command(const std::string& suite_name) {
    const auto suite = ss::parse_suite(suite_name);
    if (!suite) {
        std::cerr << "distill: unknown suite '" << suite_name << "'\n";
        return kExitUsage;
    }
    int failures = 0;
    ss::run_validation(*suite, [&](const ss::CheckResult& r) {
        std::printf("[%s] %-8s %s: %s\n", r.passed ? "PASS" : "FAIL", r.suite.c_str(),
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failures;
    });
    std::printf("%d failure(s)\n", failures);
    return failures == 0 ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Supersinglet distillation simulator"};
    app.require_subcommand(1);

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Run a named scenario and write CSV telemetry");
    run_cmd->add_option("--scenario", run.scenario, "fig2a|fig2b|fig2c|fig2d|fig2e|custom")
        ->required();
    run_cmd->add_option("--config", run.config_file, "key=value file; flags override it");
    run_cmd->add_option("--n", run.n, "Number of qubits (even)");
    run_cmd->add_option("--iterations", run.iterations, "Distillation steps");
    run_cmd->add_option("--epsilon", run.epsilon, "White-noise weight (werner)");
    run_cmd->add_option("--delta", run.delta, "Supersinglet excess (s0_mixture)");
    run_cmd->add_option("--engine", run.engine, "full|truncated|auto");
    run_cmd->add_flag("--twirl-each-iteration", run.twirl_each_iteration,
                      "Twirl after every step as well as at preparation");
    run_cmd->add_option("--seed", run.seed, "Seed recorded with the run");
    run_cmd->add_option("--out", run.out, "CSV output path")->required();
    run_cmd->add_option("--plot", run.plot, "Optional SVG plot path");

    std::string suite;
    auto* validate_cmd = app.add_subcommand("validate", "Run self-check suites");
    validate_cmd->add_option("--suite", suite, "algebra|channels|engine|all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run_cmd) return run_command(run);
        return validate_command(suite);
    } catch (const ss::EngineAbort& e) {
        std::cerr << "distill: engine abort: " << e.what() << "\n";
        return kExitAbort;
    } catch (const std::exception& e) {
        std::cerr << "distill: " << e.what() << "\n";
        return kExitUsage;
    }
}
