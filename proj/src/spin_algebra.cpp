// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

#include "supersinglet/spin_algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>

namespace supersinglet {

namespace {

// ln(k!) for the Racah sum; lgamma keeps the range far beyond desk-scale spins.
double log_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

}  // namespace

double clebsch_gordan(HalfInteger j1, HalfInteger m1, HalfInteger j2, HalfInteger m2,
                      HalfInteger J, HalfInteger M) {
    if (!is_valid_projection(j1, m1) || !is_valid_projection(j2, m2) ||
        !is_valid_projection(J, M)) {
        return 0.0;
    }
    if (m1.twice() + m2.twice() != M.twice()) return 0.0;
    const int tj1 = j1.twice(), tj2 = j2.twice(), tJ = J.twice();
    if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2 || ((tj1 + tj2 + tJ) % 2) != 0) return 0.0;

    // All of these are integers once the triangle and parity checks pass.
    const int a = (tJ + tj1 - tj2) / 2;          // J + j1 - j2
    const int b = (tJ - tj1 + tj2) / 2;          // J - j1 + j2
    const int c = (tj1 + tj2 - tJ) / 2;          // j1 + j2 - J
    const int d = (tj1 + tj2 + tJ) / 2 + 1;      // j1 + j2 + J + 1
    const int jm1m = (tj1 - m1.twice()) / 2;     // j1 - m1
    const int jm1p = (tj1 + m1.twice()) / 2;     // j1 + m1
    const int jm2m = (tj2 - m2.twice()) / 2;
    const int jm2p = (tj2 + m2.twice()) / 2;
    const int JMp = (tJ + M.twice()) / 2;
    const int JMm = (tJ - M.twice()) / 2;

    const double log_prefactor =
        0.5 * (std::log(tJ + 1.0) + log_factorial(a) + log_factorial(b) + log_factorial(c) -
               log_factorial(d) + log_factorial(JMp) + log_factorial(JMm) +
               log_factorial(jm1m) + log_factorial(jm1p) + log_factorial(jm2m) +
               log_factorial(jm2p));

    // k runs over all values keeping every factorial argument non-negative.
    const int e = (tJ - tj2 + m1.twice()) / 2;  // J - j2 + m1
    const int f = (tJ - tj1 - m2.twice()) / 2;  // J - j1 - m2
    const int k_min = std::max({0, -e, -f});
    const int k_max = std::min({c, jm1m, jm2p});
    double sum = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        const double log_term = log_factorial(k) + log_factorial(c - k) +
                                log_factorial(jm1m - k) + log_factorial(jm2p - k) +
                                log_factorial(e + k) + log_factorial(f + k);
        const double term = std::exp(log_prefactor - log_term);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

long long binomial(int n, int k) noexcept {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long multiplicity(int n_qubits, HalfInteger s) {
    if (n_qubits < 1) throw InvalidArgument("multiplicity: qubit count must be positive");
    const int ts = s.twice();
    if (ts < 0 || ts > n_qubits || ((n_qubits - ts) % 2) != 0) {
        throw InvalidArgument("multiplicity: spin " + s.str() + " is not allowed for " +
                              std::to_string(n_qubits) + " qubits");
    }
    const int k = (n_qubits - ts) / 2;  // N/2 - s
    return binomial(n_qubits, k) - binomial(n_qubits, k - 1);
}

std::vector<HalfInteger> allowed_spins(int n_qubits) {
    std::vector<HalfInteger> out;
    for (int ts = n_qubits % 2; ts <= n_qubits; ts += 2) out.push_back(HalfInteger::halves(ts));
    return out;
}

// ============================================================================
// Spin operators
// ============================================================================

Matrix SpinOperatorSet::raising() const { return sx + Complex(0.0, 1.0) * sy; }

SpinOperatorSet group_spin_operators(int n_qubits, SiteRange range) {
    if (n_qubits < 1 || n_qubits > kMaxBasisQubits + 2) {
        throw InvalidArgument("group_spin_operators: unsupported qubit count");
    }
    if (range.first > range.last) throw InvalidArgument("group_spin_operators: empty site range");
    if (range.first < 1 || range.last > n_qubits) {
        throw InvalidArgument("group_spin_operators: site range outside [1, N]");
    }
    const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
    SpinOperatorSet ops;
    ops.n_qubits = n_qubits;
    ops.sx = Matrix::Zero(dim, dim);
    ops.sy = Matrix::Zero(dim, dim);
    ops.sz = Matrix::Zero(dim, dim);
    ops.s_squared = Matrix::Zero(dim, dim);

    auto bit_of = [n_qubits](int site) {  // site is 1-based, site 1 is the MSB
        return Eigen::Index{1} << (n_qubits - site);
    };
    const int count = range.last - range.first + 1;
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (int site = range.first; site <= range.last; ++site) {
            const Eigen::Index b = bit_of(site);
            const bool down = (i & b) != 0;
            ops.sz(i, i) += down ? -0.5 : 0.5;
            ops.sx(i ^ b, i) += 0.5;
            ops.sy(i ^ b, i) += down ? Complex(0.0, -0.5) : Complex(0.0, 0.5);
        }
        // S^2 = 3n/4 + sum_{a<b} (SWAP_ab - 1/2)
        ops.s_squared(i, i) += 0.75 * count;
        for (int a = range.first; a <= range.last; ++a) {
            for (int c = a + 1; c <= range.last; ++c) {
                const Eigen::Index ba = bit_of(a), bc = bit_of(c);
                const bool same = ((i & ba) != 0) == ((i & bc) != 0);
                const Eigen::Index j = same ? i : (i ^ ba ^ bc);
                ops.s_squared(j, i) += 1.0;
                ops.s_squared(i, i) -= 0.5;
            }
        }
    }
    return ops;
}

SpinOperatorSet total_spin_operators(int n_qubits) {
    return group_spin_operators(n_qubits, SiteRange{1, n_qubits});
}

// ============================================================================
// Coupled basis
// ============================================================================

CoupledBasisTable::CoupledBasisTable(int n_qubits, std::vector<CoupledBasisEntry> entries,
                                     Matrix unitary)
    : n_qubits_(n_qubits), entries_(std::move(entries)), unitary_(std::move(unitary)) {
    block_offset_.assign(static_cast<std::size_t>(n_qubits + 1), {});
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (e.m != e.s) continue;
        auto& offsets = block_offset_.at(static_cast<std::size_t>(e.s.twice()));
        if (offsets.size() < static_cast<std::size_t>(e.alpha)) {
            offsets.resize(static_cast<std::size_t>(e.alpha));
        }
        offsets[static_cast<std::size_t>(e.alpha - 1)] = i;
    }
}

StateVector CoupledBasisTable::vector(std::size_t i) const {
    if (i >= entries_.size()) throw InvalidArgument("coupled basis index out of range");
    return {n_qubits_, unitary_.col(static_cast<Eigen::Index>(i))};
}

StateVector CoupledBasisTable::vector(HalfInteger s, int alpha, HalfInteger m) const {
    return vector(index_of(s, alpha, m));
}

std::size_t CoupledBasisTable::index_of(HalfInteger s, int alpha, HalfInteger m) const {
    const int ts = s.twice();
    if (ts < 0 || ts > n_qubits_ || !is_valid_projection(s, m) || alpha < 1) {
        throw InvalidArgument("no coupled state |" + s.str() + ", " + std::to_string(alpha) +
                              ", " + m.str() + ">");
    }
    const auto& offsets = block_offset_[static_cast<std::size_t>(ts)];
    if (static_cast<std::size_t>(alpha) > offsets.size()) {
        throw InvalidArgument("multiplicity label " + std::to_string(alpha) +
                              " exceeds A(N, s) for s = " + s.str());
    }
    return offsets[static_cast<std::size_t>(alpha - 1)] +
           static_cast<std::size_t>((ts - m.twice()) / 2);
}

Matrix CoupledBasisTable::branch(HalfInteger s, int alpha) const {
    const std::size_t first = index_of(s, alpha, s);
    return unitary_.middleCols(static_cast<Eigen::Index>(first), s.twice() + 1);
}

Matrix CoupledBasisTable::branch_projector(HalfInteger s, int alpha) const {
    const Matrix b = branch(s, alpha);
    return b * b.adjoint();
}

Matrix CoupledBasisTable::sector_projector(HalfInteger s) const {
    const auto dim = unitary_.rows();
    Matrix p = Matrix::Zero(dim, dim);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].s != s) continue;
        const auto col = unitary_.col(static_cast<Eigen::Index>(i));
        p.noalias() += col * col.adjoint();
    }
    return p;
}

Matrix CoupledBasisTable::spin_zero_columns() const {
    if (n_qubits_ % 2 != 0) return Matrix(unitary_.rows(), 0);
    const auto& offsets = block_offset_[0];
    Matrix cols(unitary_.rows(), static_cast<Eigen::Index>(offsets.size()));
    for (std::size_t a = 0; a < offsets.size(); ++a) {
        cols.col(static_cast<Eigen::Index>(a)) = unitary_.col(static_cast<Eigen::Index>(offsets[a]));
    }
    return cols;
}

namespace {

struct Branch {
    std::vector<HalfInteger> history;
    Matrix vecs;  // columns m = s, s-1, ..., -s
    [[nodiscard]] HalfInteger spin() const { return history.back(); }
};

std::vector<Branch> attach_qubit(const std::vector<Branch>& previous) {
    std::vector<Branch> next;
    for (const Branch& br : previous) {
        const HalfInteger s = br.spin();
        const Eigen::Index d = br.vecs.rows();
        for (int ts_new : {s.twice() + 1, s.twice() - 1}) {
            if (ts_new < 0) continue;
            const HalfInteger S = HalfInteger::halves(ts_new);
            Branch out;
            out.history = br.history;
            out.history.push_back(S);
            out.vecs = Matrix::Zero(2 * d, ts_new + 1);
            for (int c = 0; c <= ts_new; ++c) {
                const HalfInteger M = HalfInteger::halves(ts_new - 2 * c);
                for (int bit = 0; bit < 2; ++bit) {
                    const HalfInteger m2 = bit == 0 ? kHalf : -kHalf;
                    const HalfInteger m1 = M - m2;
                    if (!is_valid_projection(s, m1)) continue;
                    const double cg = clebsch_gordan(s, m1, kHalf, m2, S, M);
                    if (cg == 0.0) continue;
                    const auto old_col = static_cast<Eigen::Index>((s.twice() - m1.twice()) / 2);
                    for (Eigen::Index i = 0; i < d; ++i) {
                        out.vecs(2 * i + bit, c) += cg * br.vecs(i, old_col);
                    }
                }
            }
            next.push_back(std::move(out));
        }
    }
    return next;
}

}  // namespace

CoupledBasisTable build_coupled_basis(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxBasisQubits) {
        throw InvalidArgument("build_coupled_basis: qubit count must lie in [1, " +
                              std::to_string(kMaxBasisQubits) + "], got " +
                              std::to_string(n_qubits));
    }
    std::vector<Branch> branches(1);
    branches[0].history = {kHalf};
    branches[0].vecs = Matrix::Identity(2, 2);
    for (int q = 2; q <= n_qubits; ++q) branches = attach_qubit(branches);

    // s ascending, then histories in descending lexicographic order
    std::stable_sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
        if (a.spin() != b.spin()) return a.spin() < b.spin();
        return a.history > b.history;
    });

    const auto dim = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
    Matrix unitary(dim, dim);
    std::vector<CoupledBasisEntry> entries;
    entries.reserve(static_cast<std::size_t>(dim));
    std::map<int, int> alpha_counter;
    Eigen::Index col = 0;
    for (const Branch& br : branches) {
        const HalfInteger s = br.spin();
        const int alpha = ++alpha_counter[s.twice()];
        for (int c = 0; c <= s.twice(); ++c) {
            entries.push_back({s, alpha, HalfInteger::halves(s.twice() - 2 * c), br.history});
            unitary.col(col++) = br.vecs.col(c);
        }
    }
    return {n_qubits, std::move(entries), std::move(unitary)};
}

std::shared_ptr<const CoupledBasisTable> coupled_basis(int n_qubits) {
    static std::mutex mutex;
    static std::array<std::shared_ptr<const CoupledBasisTable>, kMaxBasisQubits + 1> cache;
    if (n_qubits < 1 || n_qubits > kMaxBasisQubits) {
        throw InvalidArgument("coupled_basis: qubit count must lie in [1, " +
                              std::to_string(kMaxBasisQubits) + "]");
    }
    std::lock_guard lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(n_qubits)];
    if (!slot) slot = std::make_shared<const CoupledBasisTable>(build_coupled_basis(n_qubits));
    return slot;
}

}  // namespace supersinglet
