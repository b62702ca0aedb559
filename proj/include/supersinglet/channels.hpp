// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file channels.hpp
 * @brief Collective-rotation twirl (closed form and Haar Monte Carlo),
 *        qubit permutations, and the permutation symmetrizer.
 */

#pragma once

#include "supersinglet/spin_algebra.hpp"
#include "supersinglet/types.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace supersinglet {

// ============================================================================
// Permutations
// ============================================================================

/**
 * Qubit permutation in one-line notation sigma(1) ... sigma(N), 1-based.
 * The induced operator acts as P|k1 ... kN> = |k_sigma(1) ... k_sigma(N)>.
 */
class PermutationSpec {
public:
    /// Throws InvalidArgument unless `mapping` is a bijection of [1, N].
    explicit PermutationSpec(std::vector<int> mapping);

    [[nodiscard]] static PermutationSpec identity(int n);
    /// Parses "3412"; only valid for N <= 9.
    [[nodiscard]] static PermutationSpec parse(const std::string& one_line);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(mapping_.size()); }
    [[nodiscard]] int operator()(int i) const { return mapping_.at(static_cast<std::size_t>(i - 1)); }
    [[nodiscard]] const std::vector<int>& mapping() const noexcept { return mapping_; }

    /// i -> this(other(i)). Operators compose as P_a P_b = P_{b.compose(a)}.
    [[nodiscard]] PermutationSpec compose(const PermutationSpec& other) const;
    [[nodiscard]] PermutationSpec inverse() const;
    [[nodiscard]] std::string one_line() const;

    auto operator<=>(const PermutationSpec&) const = default;

    /// Image of a computational basis index under P.
    [[nodiscard]] std::uint64_t apply_to_index(std::uint64_t index) const;

private:
    std::vector<int> mapping_;
};

/// Dense 0/1 permutation matrix of P_sigma on `n_qubits` qubits.
[[nodiscard]] Matrix permutation_operator(const PermutationSpec& sigma, int n_qubits);

/// P|psi> as an index shuffle.
[[nodiscard]] StateVector permute(const PermutationSpec& sigma, const StateVector& psi);
/// P rho P^dagger as an index shuffle.
[[nodiscard]] Matrix permute(const PermutationSpec& sigma, const Matrix& rho);

/**
 * Group generated by within-group permutations and the I <-> II swap
 * sigma(n) = ((n - 1 + N/2) mod N) + 1. Size 2 ((N/2)!)^2, sorted.
 */
[[nodiscard]] std::vector<PermutationSpec> supersinglet_symmetry_group(int n_qubits);

/// Permutations fixing group I and permuting group II arbitrarily ((N/2)! elements).
[[nodiscard]] std::vector<PermutationSpec> group_two_permutations(int n_qubits);

/// The I <-> II swap permutation.
[[nodiscard]] PermutationSpec group_swap(int n_qubits);

/// (1/|Q|) sum_{sigma in Q} P_sigma rho P_sigma^dagger.
[[nodiscard]] DensityMatrix symmetrize(const DensityMatrix& rho,
                                       std::span<const PermutationSpec> group);

// ============================================================================
// Twirling
// ============================================================================

/// Gamma_{s l l'} = sum_m |s, l, m><s, l', m|.
struct SectorTransferOperator {
    HalfInteger s;
    int l = 1;
    int l_prime = 1;
    Matrix matrix;
};

[[nodiscard]] SectorTransferOperator sector_transfer(const CoupledBasisTable& basis, HalfInteger s,
                                                     int l, int l_prime);

/**
 * Closed-form SU(2) twirl:
 *   T(rho) = sum_s 1/(2s+1) sum_{l,l'} Tr(rho Gamma_{sll'}^dagger) Gamma_{sll'}.
 */
[[nodiscard]] DensityMatrix twirl(const DensityMatrix& rho);

/// U^{xN} rho U^{dagger xN} for a single-qubit U.
[[nodiscard]] Matrix rotate_all(const Matrix& rho, int n_qubits, const Matrix2& u);

/// U^{xN} |psi>.
[[nodiscard]] Vector rotate_all(const Vector& psi, int n_qubits, const Matrix2& u);

/// Average of U^{xN} rho U^{dagger xN} over the given unitaries.
[[nodiscard]] DensityMatrix twirl_average(const DensityMatrix& rho,
                                          std::span<const Matrix2> unitaries);

/**
 * Haar-uniform SU(2) element from four normal deviates (a uniform unit
 * quaternion). The normals come from Box-Muller over std::mt19937_64 seeded
 * with `seed`, so the result is reproducible bit-for-bit.
 */
[[nodiscard]] Matrix2 haar_su2(std::uint64_t seed);

/// (1/samples) sum_i U_i^{xN} rho U_i^{dagger xN}, where U_i = haar_su2(seed + i).
[[nodiscard]] DensityMatrix twirl_monte_carlo(const DensityMatrix& rho, int samples,
                                              std::uint64_t seed);

}  // namespace supersinglet
