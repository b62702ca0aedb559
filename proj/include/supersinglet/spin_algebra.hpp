// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spin_algebra.hpp
 * @brief Clebsch-Gordan coefficients, collective spin operators, and the
 *        coupled |s, alpha, m> basis of N qubits.
 *
 * Phase convention: Condon-Shortley. Coupled states are built by attaching
 * one qubit at a time (left to right). Within a given total spin s the
 * multiplicity label alpha enumerates coupling histories in descending
 * lexicographic order of the intermediate spins, so for three qubits
 * alpha = 1 is reached through j12 = 1 and alpha = 2 through j12 = 0.
 */

#pragma once

#include "supersinglet/types.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace supersinglet {

/// Condon-Shortley <j1 m1; j2 m2 | J M>. Returns 0 for any out-of-domain input.
[[nodiscard]] double clebsch_gordan(HalfInteger j1, HalfInteger m1, HalfInteger j2,
                                    HalfInteger m2, HalfInteger J, HalfInteger M);

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
[[nodiscard]] long long binomial(int n, int k) noexcept;

/**
 * Number of spin-s irreducible blocks among n qubits,
 * C(n, n/2 - s) - C(n, n/2 - s - 1).
 * Throws InvalidArgument unless 0 <= s <= n/2 with matching parity.
 */
[[nodiscard]] long long multiplicity(int n_qubits, HalfInteger s);

/// Allowed total spins for n qubits, ascending.
[[nodiscard]] std::vector<HalfInteger> allowed_spins(int n_qubits);

// ============================================================================
// Collective spin operators
// ============================================================================

/// Inclusive 1-based site interval [first, last].
struct SiteRange {
    int first = 1;
    int last = 1;
};

struct SpinOperatorSet {
    int n_qubits = 0;
    Matrix sx;
    Matrix sy;
    Matrix sz;
    Matrix s_squared;

    /// S+ = Sx + i Sy
    [[nodiscard]] Matrix raising() const;
};

/// Spin operators (1/2) sum of Paulis over `range`, identity elsewhere.
[[nodiscard]] SpinOperatorSet group_spin_operators(int n_qubits, SiteRange range);
[[nodiscard]] SpinOperatorSet total_spin_operators(int n_qubits);

// ============================================================================
// Coupled basis
// ============================================================================

struct CoupledBasisEntry {
    HalfInteger s;
    int alpha = 1;  ///< 1-based multiplicity label
    HalfInteger m;
    /// Intermediate spins after attaching qubits 1, 2, ..., N (last equals s).
    std::vector<HalfInteger> coupling_history;
};

/**
 * Complete orthonormal table of |s, alpha, m> for n qubits.
 *
 * Entries are ordered by s ascending, then alpha ascending, then m
 * descending. Column i of unitary() is the computational-basis vector of
 * entry i. For three qubits this ordering coincides with the local Schur
 * ordering v(j, alpha, m) = 5j + 2alpha - m - 4.
 */
class CoupledBasisTable {
public:
    CoupledBasisTable(int n_qubits, std::vector<CoupledBasisEntry> entries, Matrix unitary);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] const std::vector<CoupledBasisEntry>& entries() const noexcept { return entries_; }
    [[nodiscard]] const CoupledBasisEntry& entry(std::size_t i) const { return entries_.at(i); }
    [[nodiscard]] const Matrix& unitary() const noexcept { return unitary_; }

    [[nodiscard]] StateVector vector(std::size_t i) const;
    [[nodiscard]] StateVector vector(HalfInteger s, int alpha, HalfInteger m) const;

    /// Position of (s, alpha, m); throws InvalidArgument when absent.
    [[nodiscard]] std::size_t index_of(HalfInteger s, int alpha, HalfInteger m) const;

    /// Columns |s, alpha, m = s>, ..., |s, alpha, -s> (2s+1 columns).
    [[nodiscard]] Matrix branch(HalfInteger s, int alpha) const;
    /// Sum over m of |s, alpha, m><s, alpha, m|.
    [[nodiscard]] Matrix branch_projector(HalfInteger s, int alpha) const;
    /// Projector onto total spin s.
    [[nodiscard]] Matrix sector_projector(HalfInteger s) const;
    /// Columns |0, alpha, 0> for alpha = 1..A(N, 0); empty for odd N.
    [[nodiscard]] Matrix spin_zero_columns() const;

private:
    int n_qubits_;
    std::vector<CoupledBasisEntry> entries_;
    Matrix unitary_;
    // offset of the (s, alpha) block; index = offset[(twice_s)][alpha-1] + (s - m)
    std::vector<std::vector<std::size_t>> block_offset_;
};

inline constexpr int kMaxBasisQubits = 10;

/// Builds the table by sequential coupling. Requires 1 <= n <= 10.
[[nodiscard]] CoupledBasisTable build_coupled_basis(int n_qubits);

/// Process-wide immutable cache of build_coupled_basis results.
[[nodiscard]] std::shared_ptr<const CoupledBasisTable> coupled_basis(int n_qubits);

}  // namespace supersinglet
