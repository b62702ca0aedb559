// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

#include "supersinglet/state_factory.hpp"

#include "supersinglet/spin_algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace supersinglet {

namespace {

void require_even(int n_qubits, const char* what) {
    if (n_qubits < 2 || n_qubits % 2 != 0) {
        throw InvalidArgument(std::string(what) + ": qubit count must be even and >= 2, got " +
                              std::to_string(n_qubits));
    }
}

}  // namespace

DensityMatrix MixtureRecipe::assemble() const {
    if (components.empty()) throw InvalidArgument("mixture has no components");
    int n = 0;
    double total = 0.0;
    Matrix acc;
    for (const auto& c : components) {
        if (c.weight < 0.0) throw InvalidArgument("mixture weights must be non-negative");
        const Matrix m = std::visit(
            [](const auto& s) -> Matrix {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, StateVector>) {
                    return DensityMatrix::pure(s).matrix();
                } else {
                    return s.matrix();
                }
            },
            c.state);
        const int nq = std::visit([](const auto& s) { return s.n_qubits(); }, c.state);
        if (acc.size() == 0) {
            n = nq;
            acc = Matrix::Zero(m.rows(), m.cols());
        } else if (nq != n) {
            throw InvalidArgument("mixture components act on different qubit counts");
        }
        acc += c.weight * m;
        total += c.weight;
    }
    if (std::abs(total - 1.0) > kAlgebraTol) {
        std::ostringstream os;
        os << "mixture weights sum to " << total << ", expected 1";
        throw InvalidArgument(os.str());
    }
    return {n, std::move(acc)};
}

StateVector dicke_state(int half_n, int k) {
    if (half_n < 1) throw InvalidArgument("dicke_state: need at least one qubit");
    if (k < 0 || k > half_n) {
        throw InvalidArgument("dicke_state: excitation count " + std::to_string(k) +
                              " outside [0, " + std::to_string(half_n) + "]");
    }
    const auto dim = static_cast<Eigen::Index>(hilbert_dim(half_n));
    const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(half_n, k)));
    Vector v = Vector::Zero(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (std::popcount(static_cast<std::uint64_t>(i)) == k) v(i) = amp;
    }
    return {half_n, std::move(v)};
}

StateVector supersinglet(int n_qubits) {
    require_even(n_qubits, "supersinglet");
    const int half = n_qubits / 2;
    const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
    const auto half_dim = static_cast<Eigen::Index>(hilbert_dim(half));
    Vector v = Vector::Zero(dim);
    for (int k = 0; k <= half; ++k) {
        const Vector left = dicke_state(half, k).amplitudes();
        const Vector right = dicke_state(half, half - k).amplitudes();
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;
        for (Eigen::Index a = 0; a < half_dim; ++a) {
            if (left(a) == 0.0) continue;
            v.segment(a * half_dim, half_dim) += sign * left(a) * right;
        }
    }
    v /= std::sqrt(static_cast<double>(half + 1));
    return {n_qubits, std::move(v)};
}

StateVector singlet_pairing(int n_qubits, const std::vector<int>& partner) {
    require_even(n_qubits, "singlet_pairing");
    const int half = n_qubits / 2;
    if (static_cast<int>(partner.size()) != half) {
        throw InvalidArgument("singlet_pairing: partner list must have N/2 entries");
    }
    std::vector<int> sorted = partner;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < half; ++i) {
        if (sorted[static_cast<std::size_t>(i)] != i + 1) {
            throw InvalidArgument("singlet_pairing: partner list is not a permutation of 1..N/2");
        }
    }
    const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
    const double amp = std::pow(2.0, -0.5 * half);
    Vector v = Vector::Zero(dim);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        double sign = 1.0;
        bool valid = true;
        for (int n = 1; n <= half; ++n) {
            const int a = n;
            const int b = half + partner[static_cast<std::size_t>(n - 1)];
            const bool bit_a = (idx >> (n_qubits - a)) & 1;
            const bool bit_b = (idx >> (n_qubits - b)) & 1;
            if (bit_a == bit_b) {
                valid = false;
                break;
            }
            if (bit_a) sign = -sign;  // (|01> - |10>)/sqrt2
        }
        if (valid) v(idx) = sign * amp;
    }
    return {n_qubits, std::move(v)};
}

StateVector singlet_chain(int n_qubits) {
    require_even(n_qubits, "singlet_chain");
    std::vector<int> identity(static_cast<std::size_t>(n_qubits / 2));
    std::iota(identity.begin(), identity.end(), 1);
    return singlet_pairing(n_qubits, identity);
}

DensityMatrix symmetrized_singlet_init(int n_qubits) {
    require_even(n_qubits, "symmetrized_singlet_init");
    std::vector<int> partner(static_cast<std::size_t>(n_qubits / 2));
    std::iota(partner.begin(), partner.end(), 1);
    std::vector<StateVector> terms;
    do {
        terms.push_back(singlet_pairing(n_qubits, partner));
    } while (std::next_permutation(partner.begin(), partner.end()));

    MixtureRecipe recipe;
    const double w = 1.0 / static_cast<double>(terms.size());
    for (auto& t : terms) recipe.components.push_back({w, std::move(t)});
    return recipe.assemble();
}

StateVector modified_ghz(int n_qubits) {
    require_even(n_qubits, "modified_ghz");
    const int half = n_qubits / 2;
    const std::uint64_t group_one = ((std::uint64_t{1} << half) - 1) << half;
    const std::uint64_t all = hilbert_dim(n_qubits) - 1;
    Vector v = Vector::Zero(static_cast<Eigen::Index>(hilbert_dim(n_qubits)));
    const double sign = (half % 2 == 0) ? 1.0 : -1.0;
    // X on every group I qubit maps |0...0> -> |1..1 0..0>, |1...1> -> |0..0 1..1>
    v(static_cast<Eigen::Index>(group_one)) += 1.0 / std::sqrt(2.0);
    v(static_cast<Eigen::Index>(all ^ group_one)) += sign / std::sqrt(2.0);
    return {n_qubits, std::move(v)};
}

DensityMatrix werner_mix(const DensityMatrix& rho, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw InvalidArgument("werner_mix: epsilon must lie in [0, 1]");
    }
    return MixtureRecipe{{{1.0 - epsilon, rho},
                          {epsilon, DensityMatrix::maximally_mixed(rho.n_qubits())}}}
        .assemble();
}

DensityMatrix s0_mixture(int n_qubits, double delta) {
    require_even(n_qubits, "s0_mixture");
    if (!(delta <= 1.0) || !std::isfinite(delta)) {
        throw InvalidArgument("s0_mixture: delta must be finite and at most 1");
    }
    const auto basis = coupled_basis(n_qubits);
    const Matrix cols = basis->spin_zero_columns();
    const auto a0 = static_cast<double>(cols.cols());
    const Vector s = supersinglet(n_qubits).amplitudes();
    // Applied verbatim for delta < 0; positivity is checked below.
    const Matrix m = (1.0 - delta) * (cols * cols.adjoint()) / a0 + delta * (s * s.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPositivityTol) {
        std::ostringstream os;
        os << "s0_mixture: delta = " << delta << " gives a non-positive state (min eigenvalue "
           << es.eigenvalues().minCoeff() << ")";
        throw InvalidArgument(os.str());
    }
    return {n_qubits, m};
}

}  // namespace supersinglet
