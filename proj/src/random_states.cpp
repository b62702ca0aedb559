// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

#include "supersinglet/random_states.hpp"

#include "supersinglet/spin_algebra.hpp"

#include <Eigen/QR>

namespace supersinglet {

namespace {

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Matrix g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = Complex(normal(rng), normal(rng));
    }
    return g;
}

Matrix normalized_gram(const Matrix& g) {
    Matrix m = g * g.adjoint();
    m = 0.5 * (m + m.adjoint());
    return m / m.trace().real();
}

}  // namespace

DensityMatrix random_density(int n_qubits, std::mt19937_64& rng) {
    const auto d = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
    return {n_qubits, normalized_gram(ginibre(d, d, rng))};
}

DensityMatrix random_spin_zero_density(int n_qubits, std::mt19937_64& rng) {
    const Matrix b = coupled_basis(n_qubits)->spin_zero_columns();
    if (b.cols() == 0) throw InvalidArgument("no spin-zero sector for odd N");
    const Matrix reduced = normalized_gram(ginibre(b.cols(), b.cols(), rng));
    Matrix full = b * reduced * b.adjoint();
    full = 0.5 * (full + full.adjoint());
    return {n_qubits, full};
}

Matrix random_unitary(Eigen::Index d, std::mt19937_64& rng) {
    const Matrix g = ginibre(d, d, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix the phase of each column so the distribution is Haar
    for (Eigen::Index i = 0; i < d; ++i) {
        const Complex rii = r(i, i);
        q.col(i) *= rii / std::abs(rii);
    }
    return q;
}

Matrix2 random_unitary2(std::mt19937_64& rng) { return random_unitary(2, rng); }

}  // namespace supersinglet
