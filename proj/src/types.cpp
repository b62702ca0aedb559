// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

#include "supersinglet/types.hpp"

#include <cmath>
#include <sstream>

namespace supersinglet {

VanishingProbability::VanishingProbability(double p_suc)
    : EngineAbort([p_suc] {
          std::ostringstream os;
          os << "postselection branch has vanishing probability (p_suc = " << p_suc << ")";
          return os.str();
      }()),
      p_suc_(p_suc) {}

std::string HalfInteger::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

StateVector::StateVector(int n_qubits, Vector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw InvalidArgument("qubit count must lie in [1, 30], got " + std::to_string(n_qubits));
    }
    if (static_cast<std::uint64_t>(amplitudes_.size()) != hilbert_dim(n_qubits)) {
        throw InvalidArgument("amplitude vector length does not match 2^" +
                              std::to_string(n_qubits));
    }
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(hilbert_dim(n_qubits)));
    if (index >= hilbert_dim(n_qubits)) throw InvalidArgument("basis index out of range");
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return {n_qubits, std::move(v)};
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(amplitudes_.norm() - 1.0) < tol;
}

Complex StateVector::inner(const StateVector& other) const {
    if (other.dim() != dim()) throw InvalidArgument("inner product of states of different size");
    return amplitudes_.dot(other.amplitudes_);
}

DensityMatrix::DensityMatrix(int n_qubits, Matrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw InvalidArgument("density matrix shape does not match 2^" + std::to_string(n_qubits));
    }
    if (max_abs_diff(matrix_, matrix_.adjoint()) > kAlgebraTol) {
        throw InvalidArgument("density matrix is not Hermitian");
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > kAlgebraTol) {
        std::ostringstream os;
        os << "density matrix trace is " << tr.real() << ", expected 1";
        throw InvalidArgument(os.str());
    }
    const double lo = min_eigenvalue();
    if (lo < -kPositivityTol) {
        std::ostringstream os;
        os << "density matrix is not positive semidefinite (min eigenvalue " << lo << ")";
        throw InvalidArgument(os.str());
    }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    const Vector& a = psi.amplitudes();
    return {psi.n_qubits(), a * a.adjoint() / a.squaredNorm()};
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
    return {n_qubits, Matrix::Identity(dim, dim) / static_cast<double>(dim)};
}

double DensityMatrix::expectation(const StateVector& psi) const {
    if (psi.dim() != dim()) throw InvalidArgument("state and density matrix differ in size");
    const Vector& a = psi.amplitudes();
    return a.dot(matrix_ * a).real();
}

double DensityMatrix::min_eigenvalue() const {
    const Matrix herm = 0.5 * (matrix_ + matrix_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument("max_abs_diff: shape mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double trace_distance(const Matrix& a, const Matrix& b) {
    const Matrix d = a - b;
    const Matrix herm = 0.5 * (d + d.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace supersinglet
