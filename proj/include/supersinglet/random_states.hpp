// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file random_states.hpp
 * @brief Seeded random states and unitaries for property checks.
 */

#pragma once

#include "supersinglet/types.hpp"

#include <random>

namespace supersinglet {

/// Ginibre-ensemble density matrix G G^dagger / Tr(G G^dagger), full rank.
[[nodiscard]] DensityMatrix random_density(int n_qubits, std::mt19937_64& rng);

/// Random density matrix supported on the s = 0 sector, as a full 2^N matrix.
[[nodiscard]] DensityMatrix random_spin_zero_density(int n_qubits, std::mt19937_64& rng);

/// Haar-random single-qubit unitary (random global phase included).
[[nodiscard]] Matrix2 random_unitary2(std::mt19937_64& rng);

/// Haar-random d x d unitary from the QR decomposition of a Ginibre matrix.
[[nodiscard]] Matrix random_unitary(Eigen::Index d, std::mt19937_64& rng);

}  // namespace supersinglet
