// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file state_factory.hpp
 * @brief Named states: Dicke, supersinglet, singlet chains, and the mixed
 *        initial states fed to the distillation protocol.
 *
 * Sites 1..N/2 form group I, sites N/2+1..N form group II.
 */

#pragma once

#include "supersinglet/types.hpp"

#include <variant>
#include <vector>

namespace supersinglet {

/// Weighted mixture of pure or mixed components; weights are non-negative and sum to 1.
struct MixtureRecipe {
    struct Component {
        double weight = 0.0;
        std::variant<StateVector, DensityMatrix> state;
    };
    std::vector<Component> components;

    [[nodiscard]] DensityMatrix assemble() const;
};

/// Symmetric state of `half_n` qubits with exactly k excitations (|1>s).
[[nodiscard]] StateVector dicke_state(int half_n, int k);

/**
 * The N-qubit supersinglet: total spin zero with each half coupled to
 * maximal spin N/4. Global sign follows the tabulated N = 4, 6 amplitudes
 * (negative coefficient on |0...01...1>).
 */
[[nodiscard]] StateVector supersinglet(int n_qubits);

/// Product of singlets on pairs (n, n + N/2), n = 1..N/2.
[[nodiscard]] StateVector singlet_chain(int n_qubits);

/// Product of singlets on pairs (n, N/2 + partner[n-1]); partner is a permutation of 1..N/2.
[[nodiscard]] StateVector singlet_pairing(int n_qubits, const std::vector<int>& partner);

/// Uniform mixture of singlet_chain over all (N/2)! permutations of group II.
[[nodiscard]] DensityMatrix symmetrized_singlet_init(int n_qubits);

/// (prod_{n=1}^{N/2} X_n) (|0...0> + (-1)^{N/2} |1...1>) / sqrt(2).
[[nodiscard]] StateVector modified_ghz(int n_qubits);

/// (1 - epsilon) rho + epsilon I / 2^N.
[[nodiscard]] DensityMatrix werner_mix(const DensityMatrix& rho, double epsilon);

/**
 * (1 - delta) Pi_0 / A(N, 0) + delta |S_N><S_N|, with Pi_0 the spin-zero
 * projector. Negative delta is accepted while the result stays positive.
 */
[[nodiscard]] DensityMatrix s0_mixture(int n_qubits, double delta);

}  // namespace supersinglet
