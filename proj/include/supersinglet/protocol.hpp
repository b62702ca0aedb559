// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file protocol.hpp
 * @brief The distillation loop: prepare, twirl, symmetrize, then iterate the
 *        three-copy step with the selected engine.
 */

#pragma once

#include "supersinglet/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace supersinglet {

enum class InitialState { singlet_symmetrized, modified_ghz, werner, s0_mixture };
enum class Engine { full, truncated, auto_select };
/// Engine that actually ran a step.
enum class EngineKind { full, truncated };

[[nodiscard]] std::string_view to_string(InitialState s) noexcept;
[[nodiscard]] std::string_view to_string(Engine e) noexcept;
[[nodiscard]] std::string_view to_string(EngineKind e) noexcept;
[[nodiscard]] std::optional<InitialState> parse_initial_state(std::string_view text);
[[nodiscard]] std::optional<Engine> parse_engine(std::string_view text);

struct ProtocolConfig {
    int n_qubits = 4;
    InitialState initial_state = InitialState::singlet_symmetrized;
    double epsilon = 0.0;  ///< white-noise weight (werner)
    double delta = 0.0;    ///< supersinglet excess (s0_mixture)
    Engine engine = Engine::auto_select;
    int iterations = 8;
    bool twirl_each_iteration = false;
    /// Recorded for reproducibility; every stage of the pipeline is deterministic.
    std::uint64_t seed = 0;

    /// Throws InvalidArgument on an inconsistent configuration.
    void validate() const;
};

struct IterationRecord {
    int iteration = 0;
    double fidelity = 0.0;
    double success_probability = 1.0;
    double trace_residual = 0.0;
    EngineKind engine = EngineKind::full;
};

/// Steps 1-3: the state fed to the first distillation step.
[[nodiscard]] DensityMatrix prepare_initial_state(const ProtocolConfig& config);

using RecordSink = std::function<void(const IterationRecord&)>;

/**
 * Runs the protocol. Iteration 0 records the prepared state (p_suc = 1), so a
 * completed run returns iterations + 1 records. On an engine abort the sink
 * has already seen every completed record and the EngineAbort propagates.
 */
std::vector<IterationRecord> run_protocol(const ProtocolConfig& config,
                                          const RecordSink& sink = {});

}  // namespace supersinglet
