// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file types.hpp
 * @brief Shared numeric aliases, spin quantum numbers, and qubit states.
 *
 * Qubit convention: |0> is spin up (m = +1/2). A computational state
 * |k1 k2 ... kN> maps to the integer whose most significant bit is k1.
 */

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace supersinglet {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;

/// Tolerance for algebraic identities at double precision.
inline constexpr double kAlgebraTol = 1e-12;
/// Smallest eigenvalue a density matrix may have before it is rejected.
inline constexpr double kPositivityTol = 1e-10;

// ============================================================================
// Errors
// ============================================================================

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The distillation run cannot continue (e.g. postselection never succeeds).
class EngineAbort : public Error {
public:
    using Error::Error;
};

class VanishingProbability : public EngineAbort {
public:
    explicit VanishingProbability(double p_suc);
    [[nodiscard]] double success_probability() const noexcept { return p_suc_; }

private:
    double p_suc_;
};

// ============================================================================
// HalfInteger
// ============================================================================

/**
 * Exact j in {0, 1/2, 1, 3/2, ...} (or a signed m) stored as 2j.
 */
class HalfInteger {
public:
    constexpr HalfInteger() = default;

    [[nodiscard]] static constexpr HalfInteger halves(int twice_value) noexcept {
        HalfInteger h;
        h.twice_ = twice_value;
        return h;
    }
    [[nodiscard]] static constexpr HalfInteger whole(int value) noexcept {
        return halves(2 * value);
    }

    [[nodiscard]] constexpr int twice() const noexcept { return twice_; }
    [[nodiscard]] constexpr double value() const noexcept { return 0.5 * twice_; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
    /// j(j+1)
    [[nodiscard]] constexpr double casimir() const noexcept {
        return 0.25 * twice_ * (twice_ + 2);
    }

    constexpr auto operator<=>(const HalfInteger&) const = default;

    constexpr HalfInteger operator+(HalfInteger o) const noexcept { return halves(twice_ + o.twice_); }
    constexpr HalfInteger operator-(HalfInteger o) const noexcept { return halves(twice_ - o.twice_); }
    constexpr HalfInteger operator-() const noexcept { return halves(-twice_); }

    /// "3/2", "-1/2", "2"
    [[nodiscard]] std::string str() const;

private:
    int twice_ = 0;
};

/// True when |m| <= j and m has the same half-integer parity as j.
[[nodiscard]] constexpr bool is_valid_projection(HalfInteger j, HalfInteger m) noexcept {
    const int tj = j.twice();
    const int tm = m.twice();
    return tj >= 0 && tm >= -tj && tm <= tj && ((tj - tm) % 2 == 0);
}

inline constexpr HalfInteger kHalf = HalfInteger::halves(1);

// ============================================================================
// StateVector / DensityMatrix
// ============================================================================

[[nodiscard]] constexpr std::uint64_t hilbert_dim(int n_qubits) noexcept {
    return std::uint64_t{1} << n_qubits;
}

/// Pure state of n qubits in the computational basis.
class StateVector {
public:
    StateVector(int n_qubits, Vector amplitudes);

    [[nodiscard]] static StateVector basis_state(int n_qubits, std::uint64_t index);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] Eigen::Index dim() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] const Vector& amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] Complex operator[](std::uint64_t index) const {
        return amplitudes_(static_cast<Eigen::Index>(index));
    }
    [[nodiscard]] double norm() const { return amplitudes_.norm(); }
    [[nodiscard]] bool is_normalized(double tol = kAlgebraTol) const;

    /// <this|other>
    [[nodiscard]] Complex inner(const StateVector& other) const;

private:
    int n_qubits_;
    Vector amplitudes_;
};

/**
 * Hermitian, unit-trace, positive semidefinite operator on n qubits.
 * The constructor enforces all three properties.
 */
class DensityMatrix {
public:
    DensityMatrix(int n_qubits, Matrix matrix);

    [[nodiscard]] static DensityMatrix pure(const StateVector& psi);
    [[nodiscard]] static DensityMatrix maximally_mixed(int n_qubits);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] Eigen::Index dim() const noexcept { return matrix_.rows(); }
    [[nodiscard]] const Matrix& matrix() const noexcept { return matrix_; }

    /// <psi|rho|psi>, real part; the imaginary residual is below kAlgebraTol.
    [[nodiscard]] double expectation(const StateVector& psi) const;
    [[nodiscard]] double min_eigenvalue() const;

private:
    int n_qubits_;
    Matrix matrix_;
};

/// Largest |entry| of a - b.
[[nodiscard]] double max_abs_diff(const Matrix& a, const Matrix& b);
/// (1/2) * sum of |eigenvalues| of a - b, for Hermitian a and b.
[[nodiscard]] double trace_distance(const Matrix& a, const Matrix& b);

}  // namespace supersinglet
