// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

#include "supersinglet/experiment.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace supersinglet {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw InvalidArgument("cannot parse '" + std::string(text) + "' for key '" + key + "'");
    }
    return value;
}

bool parse_bool(const std::string& key, std::string_view text) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw InvalidArgument("cannot parse '" + std::string(text) + "' as a boolean for key '" +
                          key + "'");
}

}  // namespace

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names{"fig2a", "fig2b", "fig2c", "fig2d", "fig2e",
                                                "custom"};
    return names;
}

ProtocolConfig scenario_defaults(std::string_view name) {
    ProtocolConfig c;
    if (name == "fig2a") {
        c.n_qubits = 4;
        c.initial_state = InitialState::singlet_symmetrized;
        c.iterations = 8;
    } else if (name == "fig2b") {
        c.n_qubits = 6;
        c.initial_state = InitialState::singlet_symmetrized;
        c.engine = Engine::truncated;
        c.iterations = 10;
    } else if (name == "fig2c") {
        c.n_qubits = 4;
        c.initial_state = InitialState::werner;
        c.epsilon = 0.1;
        c.engine = Engine::full;
        c.iterations = 12;
    } else if (name == "fig2d") {
        c.n_qubits = 4;
        c.initial_state = InitialState::s0_mixture;
        c.delta = 0.1;
        c.iterations = 10;
    } else if (name == "fig2e") {
        // Twirl once after preparation. Re-twirling every iteration gives the
        // same sequence, since the step commutes with collective rotations.
        c.n_qubits = 4;
        c.initial_state = InitialState::modified_ghz;
        c.engine = Engine::full;
        c.twirl_each_iteration = false;
        c.iterations = 8;
    } else if (name != "custom") {
        throw InvalidArgument("unknown scenario '" + std::string(name) +
                              "' (expected fig2a, fig2b, fig2c, fig2d, fig2e or custom)");
    }
    return c;
}

std::vector<double> fig2d_default_deltas() { return {-0.2, -0.1, 0.0, 0.1, 0.2}; }

void apply_overrides(ProtocolConfig& config, const Overrides& overrides) {
    for (const auto& [key, value] : overrides) {
        if (key == "n_qubits" || key == "n") {
            config.n_qubits = parse_number<int>(key, value);
        } else if (key == "initial_state") {
            const auto s = parse_initial_state(value);
            if (!s) throw InvalidArgument("unknown initial_state '" + value + "'");
            config.initial_state = *s;
        } else if (key == "epsilon") {
            config.epsilon = parse_number<double>(key, value);
        } else if (key == "delta") {
            config.delta = parse_number<double>(key, value);
        } else if (key == "engine") {
            const auto e = parse_engine(value);
            if (!e) throw InvalidArgument("unknown engine '" + value + "' (full|truncated|auto)");
            config.engine = *e;
        } else if (key == "iterations") {
            config.iterations = parse_number<int>(key, value);
        } else if (key == "twirl_each_iteration") {
            config.twirl_each_iteration = parse_bool(key, value);
        } else if (key == "seed") {
            config.seed = parse_number<std::uint64_t>(key, value);
        } else {
            throw InvalidArgument("unknown configuration key '" + key + "'");
        }
    }
}

Overrides parse_config_text(std::string_view text) {
    Overrides out;
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw InvalidArgument("config line " + std::to_string(line_no) + ": expected key=value");
        }
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) {
            throw InvalidArgument("config line " + std::to_string(line_no) + ": empty key");
        }
        out[std::string(key)] = std::string(trim(line.substr(eq + 1)));
    }
    return out;
}

Overrides parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

ScenarioResult run_scenario(std::string_view name, const Overrides& overrides) {
    ScenarioResult result;
    result.name = std::string(name);
    result.config = scenario_defaults(name);
    apply_overrides(result.config, overrides);
    result.config.validate();

    const auto start = std::chrono::steady_clock::now();
    try {
        // the sink keeps the completed prefix if the engine aborts
        (void)run_protocol(result.config,
                           [&](const IterationRecord& r) { result.records.push_back(r); });
    } catch (const EngineAbort& e) {
        result.abort_reason = e.what();
    }
    result.wall_time = std::chrono::steady_clock::now() - start;
    return result;
}

std::string to_csv(const std::vector<IterationRecord>& records) {
    std::string out(kCsvHeader);
    out += '\n';
    char buf[160];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,", r.iteration, r.fidelity,
                      r.success_probability, r.trace_residual);
        out += buf;
        out += to_string(r.engine);
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<IterationRecord>& records, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    const std::string text = to_csv(records);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error("failed writing " + path.string());
}

}  // namespace supersinglet
