// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file experiment.hpp
 * @brief Named scenarios, key=value overrides, CSV telemetry and SVG plots.
 */

#pragma once

#include "supersinglet/protocol.hpp"

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace supersinglet {

/// key -> value; keys match ProtocolConfig field names (`n` is accepted for n_qubits).
using Overrides = std::map<std::string, std::string>;

struct ScenarioResult {
    std::string name;
    ProtocolConfig config;
    std::vector<IterationRecord> records;
    std::chrono::duration<double> wall_time{};
    /// Set when the engine aborted; records then hold the completed prefix.
    std::optional<std::string> abort_reason;
};

/// fig2a, fig2b, fig2c, fig2d, fig2e, custom
[[nodiscard]] const std::vector<std::string>& scenario_names();

/// Pinned defaults; throws InvalidArgument for an unknown name.
[[nodiscard]] ProtocolConfig scenario_defaults(std::string_view name);

/// The delta values the CLI sweeps for fig2d when --delta is absent.
[[nodiscard]] std::vector<double> fig2d_default_deltas();

/// Throws InvalidArgument on unknown keys or unparsable values.
void apply_overrides(ProtocolConfig& config, const Overrides& overrides);

/// Flat key=value lines; `#` starts a comment; blank lines ignored.
[[nodiscard]] Overrides parse_config_text(std::string_view text);
[[nodiscard]] Overrides parse_config_file(const std::filesystem::path& path);

/// Defaults merged with overrides, then run_protocol. Engine aborts are
/// captured in abort_reason; configuration errors propagate.
[[nodiscard]] ScenarioResult run_scenario(std::string_view name, const Overrides& overrides);

inline constexpr std::string_view kCsvHeader =
    "iteration,fidelity,success_probability,trace_residual,engine";

/// Header plus one LF-terminated row per record, reals as %.17g.
[[nodiscard]] std::string to_csv(const std::vector<IterationRecord>& records);
/// Throws Error naming the path when it cannot be written.
void write_csv(const std::vector<IterationRecord>& records, const std::filesystem::path& path);

/// Self-contained SVG: fidelity and 10 x success probability against iteration.
/// Throws InvalidArgument for a result with no records.
[[nodiscard]] std::string render_svg(const ScenarioResult& result);
void emit_plot(const ScenarioResult& result, const std::filesystem::path& path);

}  // namespace supersinglet
