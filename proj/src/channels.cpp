// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

#include "supersinglet/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

namespace supersinglet {

// ============================================================================
// Permutations
// ============================================================================

PermutationSpec::PermutationSpec(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    if (mapping_.empty()) throw InvalidArgument("permutation must act on at least one qubit");
    std::vector<bool> seen(mapping_.size(), false);
    const int n = size();
    for (int v : mapping_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
            throw InvalidArgument("permutation mapping is not a bijection of [1, " +
                                  std::to_string(n) + "]");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

PermutationSpec PermutationSpec::identity(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 1);
    return PermutationSpec(std::move(m));
}

PermutationSpec PermutationSpec::parse(const std::string& one_line) {
    std::vector<int> m;
    for (char c : one_line) {
        if (c < '1' || c > '9') throw InvalidArgument("cannot parse permutation '" + one_line + "'");
        m.push_back(c - '0');
    }
    return PermutationSpec(std::move(m));
}

PermutationSpec PermutationSpec::compose(const PermutationSpec& other) const {
    if (other.size() != size()) throw InvalidArgument("composing permutations of different size");
    std::vector<int> m(mapping_.size());
    for (int i = 1; i <= size(); ++i) m[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
    return PermutationSpec(std::move(m));
}

PermutationSpec PermutationSpec::inverse() const {
    std::vector<int> m(mapping_.size());
    for (int i = 1; i <= size(); ++i) m[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return PermutationSpec(std::move(m));
}

std::string PermutationSpec::one_line() const {
    std::string out;
    for (std::size_t i = 0; i < mapping_.size(); ++i) {
        if (size() > 9 && i > 0) out += ' ';
        out += std::to_string(mapping_[i]);
    }
    return out;
}

std::uint64_t PermutationSpec::apply_to_index(std::uint64_t index) const {
    const int n = size();
    std::uint64_t out = 0;
    for (int i = 1; i <= n; ++i) {
        const std::uint64_t bit = (index >> (n - (*this)(i))) & 1U;
        out |= bit << (n - i);
    }
    return out;
}

namespace {

std::vector<std::uint64_t> index_image(const PermutationSpec& sigma, int n_qubits) {
    if (sigma.size() != n_qubits) {
        throw InvalidArgument("permutation acts on " + std::to_string(sigma.size()) +
                              " qubits, state has " + std::to_string(n_qubits));
    }
    std::vector<std::uint64_t> image(hilbert_dim(n_qubits));
    for (std::uint64_t k = 0; k < image.size(); ++k) image[k] = sigma.apply_to_index(k);
    return image;
}

int qubits_for_dim(Eigen::Index dim) {
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    if ((Eigen::Index{1} << n) != dim) throw InvalidArgument("dimension is not a power of two");
    return n;
}

}  // namespace

Matrix permutation_operator(const PermutationSpec& sigma, int n_qubits) {
    const auto image = index_image(sigma, n_qubits);
    const auto dim = static_cast<Eigen::Index>(image.size());
    Matrix p = Matrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) p(static_cast<Eigen::Index>(image[static_cast<std::size_t>(k)]), k) = 1.0;
    return p;
}

StateVector permute(const PermutationSpec& sigma, const StateVector& psi) {
    const auto image = index_image(sigma, psi.n_qubits());
    Vector out(psi.dim());
    for (Eigen::Index k = 0; k < psi.dim(); ++k) {
        out(static_cast<Eigen::Index>(image[static_cast<std::size_t>(k)])) = psi.amplitudes()(k);
    }
    return {psi.n_qubits(), std::move(out)};
}

Matrix permute(const PermutationSpec& sigma, const Matrix& rho) {
    const auto image = index_image(sigma, qubits_for_dim(rho.rows()));
    const auto dim = rho.rows();
    Matrix out(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        const auto pb = static_cast<Eigen::Index>(image[static_cast<std::size_t>(b)]);
        for (Eigen::Index a = 0; a < dim; ++a) {
            out(static_cast<Eigen::Index>(image[static_cast<std::size_t>(a)]), pb) = rho(a, b);
        }
    }
    return out;
}

PermutationSpec group_swap(int n_qubits) {
    if (n_qubits < 2 || n_qubits % 2 != 0) throw InvalidArgument("group swap needs even N");
    std::vector<int> m(static_cast<std::size_t>(n_qubits));
    for (int n = 1; n <= n_qubits; ++n) {
        m[static_cast<std::size_t>(n - 1)] = ((n - 1 + n_qubits / 2) % n_qubits) + 1;
    }
    return PermutationSpec(std::move(m));
}

std::vector<PermutationSpec> group_two_permutations(int n_qubits) {
    if (n_qubits < 2 || n_qubits % 2 != 0) {
        throw InvalidArgument("group_two_permutations: qubit count must be even");
    }
    const int half = n_qubits / 2;
    std::vector<int> tail(static_cast<std::size_t>(half));
    std::iota(tail.begin(), tail.end(), half + 1);
    std::vector<PermutationSpec> out;
    do {
        std::vector<int> m(static_cast<std::size_t>(half));
        std::iota(m.begin(), m.end(), 1);
        m.insert(m.end(), tail.begin(), tail.end());
        out.emplace_back(std::move(m));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

std::vector<PermutationSpec> supersinglet_symmetry_group(int n_qubits) {
    if (n_qubits < 2 || n_qubits % 2 != 0) {
        throw InvalidArgument("supersinglet_symmetry_group: qubit count must be even");
    }
    const int half = n_qubits / 2;
    const PermutationSpec swap = group_swap(n_qubits);
    std::set<PermutationSpec> group;
    std::vector<int> head(static_cast<std::size_t>(half));
    std::iota(head.begin(), head.end(), 1);
    do {
        std::vector<int> tail(static_cast<std::size_t>(half));
        std::iota(tail.begin(), tail.end(), half + 1);
        do {
            std::vector<int> m = head;
            m.insert(m.end(), tail.begin(), tail.end());
            const PermutationSpec within(std::move(m));
            group.insert(within);
            group.insert(within.compose(swap));
        } while (std::next_permutation(tail.begin(), tail.end()));
    } while (std::next_permutation(head.begin(), head.end()));
    return {group.begin(), group.end()};
}

DensityMatrix symmetrize(const DensityMatrix& rho, std::span<const PermutationSpec> group) {
    if (group.empty()) throw InvalidArgument("symmetrize: empty permutation set");
    Matrix acc = Matrix::Zero(rho.dim(), rho.dim());
    for (const auto& sigma : group) {
        if (sigma.size() != rho.n_qubits()) {
            throw InvalidArgument("symmetrize: permutation size does not match the state");
        }
        acc += permute(sigma, rho.matrix());
    }
    acc /= static_cast<double>(group.size());
    return {rho.n_qubits(), 0.5 * (acc + acc.adjoint())};
}

// ============================================================================
// Twirling
// ============================================================================

SectorTransferOperator sector_transfer(const CoupledBasisTable& basis, HalfInteger s, int l,
                                       int l_prime) {
    return {s, l, l_prime, basis.branch(s, l) * basis.branch(s, l_prime).adjoint()};
}

DensityMatrix twirl(const DensityMatrix& rho) {
    const auto basis = coupled_basis(rho.n_qubits());
    const Matrix& v = basis->unitary();
    if (v.rows() != rho.dim()) throw InvalidArgument("twirl: dimension mismatch with the coupled basis");
    const Matrix coupled = v.adjoint() * rho.matrix() * v;
    Matrix out = Matrix::Zero(rho.dim(), rho.dim());

    for (HalfInteger s : allowed_spins(rho.n_qubits())) {
        const auto mult = static_cast<int>(multiplicity(rho.n_qubits(), s));
        const int width = s.twice() + 1;
        for (int l = 1; l <= mult; ++l) {
            const auto row0 = static_cast<Eigen::Index>(basis->index_of(s, l, s));
            for (int lp = 1; lp <= mult; ++lp) {
                const auto col0 = static_cast<Eigen::Index>(basis->index_of(s, lp, s));
                // Tr(rho Gamma^dagger_{s l l'}) = sum_m <s,l,m|rho|s,l',m>
                const Complex weight =
                    coupled.block(row0, col0, width, width).diagonal().sum() / double(width);
                for (int m = 0; m < width; ++m) out(row0 + m, col0 + m) = weight;
            }
        }
    }
    const Matrix back = v * out * v.adjoint();
    return {rho.n_qubits(), 0.5 * (back + back.adjoint())};
}

namespace {

// Left-multiplies every column of `x` by U acting on each of the n qubits.
void apply_all_left(Matrix& x, int n_qubits, const Matrix2& u) {
    const Eigen::Index dim = x.rows();
    for (int q = 0; q < n_qubits; ++q) {
        const Eigen::Index bit = Eigen::Index{1} << q;
        for (Eigen::Index c = 0; c < x.cols(); ++c) {
            for (Eigen::Index i = 0; i < dim; ++i) {
                if (i & bit) continue;
                const Complex a0 = x(i, c);
                const Complex a1 = x(i | bit, c);
                x(i, c) = u(0, 0) * a0 + u(0, 1) * a1;
                x(i | bit, c) = u(1, 0) * a0 + u(1, 1) * a1;
            }
        }
    }
}

}  // namespace

Matrix rotate_all(const Matrix& rho, int n_qubits, const Matrix2& u) {
    Matrix x = rho;
    apply_all_left(x, n_qubits, u);
    Matrix y = x.adjoint();
    apply_all_left(y, n_qubits, u);
    return y.adjoint();
}

Vector rotate_all(const Vector& psi, int n_qubits, const Matrix2& u) {
    Matrix x = psi;
    apply_all_left(x, n_qubits, u);
    return x.col(0);
}

DensityMatrix twirl_average(const DensityMatrix& rho, std::span<const Matrix2> unitaries) {
    if (unitaries.empty()) throw InvalidArgument("twirl_average: no unitaries given");
    Matrix acc = Matrix::Zero(rho.dim(), rho.dim());
    for (const Matrix2& u : unitaries) acc += rotate_all(rho.matrix(), rho.n_qubits(), u);
    acc /= static_cast<double>(unitaries.size());
    return {rho.n_qubits(), 0.5 * (acc + acc.adjoint())};
}

Matrix2 haar_su2(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto uniform = [&gen] {  // (0, 1], 53 random bits
        return (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
    };
    double a[4];
    for (int i = 0; i < 4; i += 2) {
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double theta = 2.0 * std::numbers::pi * uniform();
        a[i] = r * std::cos(theta);
        a[i + 1] = r * std::sin(theta);
    }
    const double norm = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
    for (double& x : a) x /= norm;
    // a0 I + i (a1 X + a2 Y + a3 Z)
    Matrix2 u;
    u << Complex(a[0], a[3]), Complex(a[2], a[1]), Complex(-a[2], a[1]), Complex(a[0], -a[3]);
    return u;
}

DensityMatrix twirl_monte_carlo(const DensityMatrix& rho, int samples, std::uint64_t seed) {
    if (samples < 1) throw InvalidArgument("twirl_monte_carlo: samples must be >= 1");
    std::vector<Matrix2> unitaries;
    unitaries.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) unitaries.push_back(haar_su2(seed + static_cast<std::uint64_t>(i)));
    return twirl_average(rho, unitaries);
}

}  // namespace supersinglet
