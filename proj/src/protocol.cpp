// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

#include "supersinglet/protocol.hpp"

#include "supersinglet/channels.hpp"
#include "supersinglet/distillation.hpp"
#include "supersinglet/state_factory.hpp"

#include <cmath>
#include <sstream>

namespace supersinglet {

namespace {

/// Weight outside s = 0 below which the truncated engine is exact enough.
constexpr double kSpinZeroSupport = 1e-10;

EngineKind choose_engine(const ProtocolConfig& config, const DensityMatrix& rho) {
    const double outside = nonzero_spin_weight(rho);
    switch (config.engine) {
        case Engine::full:
            return EngineKind::full;
        case Engine::truncated:
            if (outside > kSpinZeroSupport) {
                std::ostringstream os;
                os << "truncated engine requires a spin-zero state, but weight " << outside
                   << " lies outside the s = 0 sector";
                throw InvalidArgument(os.str());
            }
            return EngineKind::truncated;
        case Engine::auto_select:
            break;
    }
    if (outside <= kSpinZeroSupport) return EngineKind::truncated;
    if (config.n_qubits > kMaxFullEngineQubits) {
        throw InvalidArgument("state has support outside s = 0 and N = " +
                              std::to_string(config.n_qubits) +
                              " exceeds the full-engine memory gate");
    }
    return EngineKind::full;
}

}  // namespace

std::string_view to_string(InitialState s) noexcept {
    switch (s) {
        case InitialState::singlet_symmetrized: return "singlet_symmetrized";
        case InitialState::modified_ghz: return "modified_ghz";
        case InitialState::werner: return "werner";
        case InitialState::s0_mixture: return "s0_mixture";
    }
    return "?";
}

std::string_view to_string(Engine e) noexcept {
    switch (e) {
        case Engine::full: return "full";
        case Engine::truncated: return "truncated";
        case Engine::auto_select: return "auto";
    }
    return "?";
}

std::string_view to_string(EngineKind e) noexcept {
    return e == EngineKind::full ? "full" : "truncated";
}

std::optional<InitialState> parse_initial_state(std::string_view text) {
    for (auto s : {InitialState::singlet_symmetrized, InitialState::modified_ghz,
                   InitialState::werner, InitialState::s0_mixture}) {
        if (text == to_string(s)) return s;
    }
    return std::nullopt;
}

std::optional<Engine> parse_engine(std::string_view text) {
    for (auto e : {Engine::full, Engine::truncated, Engine::auto_select}) {
        if (text == to_string(e)) return e;
    }
    return std::nullopt;
}

void ProtocolConfig::validate() const {
    if (n_qubits < 2 || n_qubits % 2 != 0) {
        throw InvalidArgument("n_qubits must be even and >= 2, got " + std::to_string(n_qubits));
    }
    if (n_qubits > kMaxTruncatedQubits) {
        throw InvalidArgument("n_qubits must be at most " + std::to_string(kMaxTruncatedQubits));
    }
    if (iterations < 1) throw InvalidArgument("iterations must be >= 1");
    if (engine == Engine::full && n_qubits > kMaxFullEngineQubits) {
        throw InvalidArgument("full engine is limited to N <= " +
                              std::to_string(kMaxFullEngineQubits) +
                              "; use --engine truncated for spin-zero inputs");
    }
    if (initial_state == InitialState::werner && !(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw InvalidArgument("epsilon must lie in [0, 1]");
    }
    if (initial_state == InitialState::s0_mixture && !(std::isfinite(delta) && delta <= 1.0)) {
        throw InvalidArgument("delta must be finite and at most 1");
    }
}

DensityMatrix prepare_initial_state(const ProtocolConfig& config) {
    config.validate();
    const int n = config.n_qubits;
    DensityMatrix rho = [&]() -> DensityMatrix {
        switch (config.initial_state) {
            case InitialState::singlet_symmetrized: return symmetrized_singlet_init(n);
            case InitialState::modified_ghz: return DensityMatrix::pure(modified_ghz(n));
            case InitialState::werner: return werner_mix(symmetrized_singlet_init(n), config.epsilon);
            case InitialState::s0_mixture: return s0_mixture(n, config.delta);
        }
        throw InvalidArgument("unknown initial state");
    }();
    rho = twirl(rho);
    const auto group = group_two_permutations(n);
    return symmetrize(rho, group);
}

std::vector<IterationRecord> run_protocol(const ProtocolConfig& config, const RecordSink& sink) {
    const DensityMatrix initial = prepare_initial_state(config);
    const EngineKind kind = choose_engine(config, initial);

    std::vector<IterationRecord> records;
    records.reserve(static_cast<std::size_t>(config.iterations) + 1);
    auto emit = [&](IterationRecord r) {
        records.push_back(r);
        if (sink) sink(records.back());
    };

    if (kind == EngineKind::full) {
        DensityMatrix rho = initial;
        emit({0, fidelity(rho), 1.0, 0.0, kind});
        for (int it = 1; it <= config.iterations; ++it) {
            FullStep step = distill_step_full(rho);
            rho = std::move(step.state);
            if (config.twirl_each_iteration) rho = twirl(rho);
            emit({it, fidelity(rho), step.success_probability, step.trace_residual, kind});
        }
    } else {
        // the twirl acts as the identity on the s = 0 sector, so a per-iteration
        // twirl needs no work here
        SpinZeroState state = SpinZeroState::from_density(initial, kSpinZeroSupport);
        emit({0, fidelity(state), 1.0, 0.0, kind});
        for (int it = 1; it <= config.iterations; ++it) {
            TruncatedStep step = distill_step_truncated(state);
            state = std::move(step.state);
            emit({it, fidelity(state), step.success_probability, step.trace_residual, kind});
        }
    }
    return records;
}

}  // namespace supersinglet
