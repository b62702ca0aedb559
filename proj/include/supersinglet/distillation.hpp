// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file distillation.hpp
 * @brief Local three-qubit POVM, the global postselection operator, and the
 *        three-copy recurrence in the full and spin-zero truncated spaces.
 *
 * Layout of the 3N-qubit space: copy-major, global qubit q = (d-1)N + n for
 * copy d in {1,2,3} and site n in [1, N], so index = (i1 * 2^N + i2) * 2^N + i3
 * for copy-local indices i1, i2, i3. The postselection operator contracts the
 * three qubits (n, d = 1..3) of every site; it reaches them through the
 * site-major order q' = 3(n-1) + (d-1) given by copy_to_site_major().
 */

#pragma once

#include "supersinglet/spin_algebra.hpp"
#include "supersinglet/types.hpp"

#include <cstdint>
#include <memory>
#include <utility>

namespace supersinglet {

// ============================================================================
// Local measurement
// ============================================================================

/// v(j, alpha, m) = 5j + 2alpha - m - 4, the row a coupled state lands on.
[[nodiscard]] int schur_index(HalfInteger j, int alpha, HalfInteger m);

/// 8x8 unitary sending |j, alpha, m> (three qubits) to |v(j, alpha, m)>.
[[nodiscard]] Matrix schur_unitary();

struct LocalPovmElement {
    HalfInteger j;
    int alpha = 1;
    /// sum_m |v(j, alpha, m)><j, alpha, m|, embedded in 8x8.
    Matrix matrix;
};

/// Valid for (3/2, 1), (1/2, 1), (1/2, 2).
[[nodiscard]] LocalPovmElement local_povm(HalfInteger j, int alpha);

/// |0><0^(3)| + |1><1^(3)| with |k^(3)> = |1/2, 1, +-1/2>; a 2x8 matrix.
[[nodiscard]] Matrix effective_postselect_local();

/// Copy-major 3N-qubit index -> site-major index.
[[nodiscard]] std::uint64_t copy_to_site_major(std::uint64_t index, int n_sites);

inline constexpr int kMaxFullEngineQubits = 4;
inline constexpr int kMaxTruncatedQubits = 8;

/// Dense 2^N x 2^{3N} postselection operator, columns in copy-major order.
struct PostselectionOperator {
    int n_sites = 0;
    Matrix matrix;
    static constexpr const char* layout = "columns: copy-major (q = (d-1)N + n); rows: |k1...kN>";
};

/// Requires even N <= 4; larger N must use the truncated engine.
[[nodiscard]] PostselectionOperator build_postselection_operator(int n_qubits);

/// M applied to a 3N-qubit copy-major vector without forming M.
[[nodiscard]] Vector apply_postselection(const Vector& copy_major, int n_sites);

/// K (rho x rho x rho) K^dagger for K with d^3 columns, never forming the triple product.
[[nodiscard]] Matrix contract_three_copies(const Matrix& k, const Matrix& rho);

// ============================================================================
// Full engine
// ============================================================================

/// Probabilities below this abort the run.
inline constexpr double kVanishingProbability = 1e-14;

struct FullStep {
    DensityMatrix state;
    double success_probability;
    /// Frobenius norm of the anti-Hermitian part removed, relative to p_suc.
    double trace_residual;
};

/// rho -> M rho^{x3} M^dagger / p_suc. Requires even N <= 4.
[[nodiscard]] FullStep distill_step_full(const DensityMatrix& rho);

// ============================================================================
// Truncated engine
// ============================================================================

/// Density matrix restricted to the s = 0 multiplicity space {|0, alpha, 0>}.
class SpinZeroState {
public:
    SpinZeroState(int n_qubits, Matrix matrix);

    /// Projects onto the s = 0 sector; throws InvalidArgument when more than
    /// `tolerance` of the trace lies outside it.
    [[nodiscard]] static SpinZeroState from_density(const DensityMatrix& rho,
                                                    double tolerance = kPositivityTol);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const Matrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] const CoupledBasisTable& basis() const noexcept { return *basis_; }
    /// Columns |0, alpha, 0> in the computational basis.
    [[nodiscard]] Matrix basis_columns() const { return basis_->spin_zero_columns(); }

    [[nodiscard]] DensityMatrix embed() const;

private:
    int n_qubits_;
    Matrix matrix_;
    std::shared_ptr<const CoupledBasisTable> basis_;
};

/// Weight of rho outside the total-spin-zero sector, 1 - Tr(Pi_0 rho).
[[nodiscard]] double nonzero_spin_weight(const DensityMatrix& rho);

/**
 * Omega_k^{a1 a2 a3} = (<k1^(3)| x ... x <kN^(3)|) |a1, a2, a3>, stored as a
 * 2^N x A^3 matrix with column (a1 * A + a2) * A + a3 (0-based labels).
 */
struct OmegaTensor {
    int n_qubits = 0;
    int sector_dim = 0;
    Matrix values;

    [[nodiscard]] Complex at(std::uint64_t k, int a1, int a2, int a3) const {
        return values(static_cast<Eigen::Index>(k), (a1 * sector_dim + a2) * sector_dim + a3);
    }
};

[[nodiscard]] OmegaTensor build_omega_tensor(int n_qubits);
/// Cached build_omega_tensor.
[[nodiscard]] std::shared_ptr<const OmegaTensor> omega_tensor(int n_qubits);

struct TruncatedStep {
    SpinZeroState state;
    double success_probability;
    double trace_residual;
};

[[nodiscard]] TruncatedStep distill_step_truncated(const SpinZeroState& state);

// ============================================================================
// Fidelity
// ============================================================================

/// <S_N|rho|S_N>
[[nodiscard]] double fidelity(const DensityMatrix& rho);
[[nodiscard]] double fidelity(const SpinZeroState& state);

}  // namespace supersinglet
