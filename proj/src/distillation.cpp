// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

#include "supersinglet/distillation.hpp"

#include "supersinglet/state_factory.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace supersinglet {

namespace {

constexpr int kLocalDim = 8;

void require_sector(HalfInteger j, int alpha) {
    const bool ok = (j == HalfInteger::halves(3) && alpha == 1) ||
                    (j == kHalf && (alpha == 1 || alpha == 2));
    if (!ok) {
        throw InvalidArgument("no three-qubit sector (j = " + j.str() +
                              ", alpha = " + std::to_string(alpha) + ")");
    }
}

/// Copy-major -> site-major index table for 3N qubits, cached per N.
const std::vector<std::uint32_t>& site_major_table(int n_sites) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::uint32_t>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n_sites);
    if (it == cache.end()) {
        std::vector<std::uint32_t> table(hilbert_dim(3 * n_sites));
        for (std::uint64_t c = 0; c < table.size(); ++c) {
            table[c] = static_cast<std::uint32_t>(copy_to_site_major(c, n_sites));
        }
        it = cache.emplace(n_sites, std::move(table)).first;
    }
    return it->second;
}

/// Contracts each site's three qubits of a site-major vector with the 2x8 map.
Vector contract_sites(Vector current, int n_sites, const Matrix& local) {
    Eigen::Index outer = 1;
    auto inner = static_cast<Eigen::Index>(hilbert_dim(3 * (n_sites - 1)));
    for (int s = 0; s < n_sites; ++s) {
        Vector next = Vector::Zero(outer * 2 * inner);
        for (Eigen::Index o = 0; o < outer; ++o) {
            for (int t = 0; t < kLocalDim; ++t) {
                const auto src = current.segment((o * kLocalDim + t) * inner, inner);
                for (int k = 0; k < 2; ++k) {
                    const Complex w = local(k, t);
                    if (w == 0.0) continue;
                    next.segment((o * 2 + k) * inner, inner) += w * src;
                }
            }
        }
        current = std::move(next);
        outer *= 2;
        inner /= kLocalDim;
    }
    return current;
}

void require_even_engine(int n_qubits, int max_qubits, const char* what) {
    if (n_qubits < 2 || n_qubits % 2 != 0) {
        throw InvalidArgument(std::string(what) + ": qubit count must be even and >= 2");
    }
    if (n_qubits > max_qubits) {
        throw InvalidArgument(std::string(what) + ": N = " + std::to_string(n_qubits) +
                              " exceeds the memory gate of N <= " + std::to_string(max_qubits) +
                              "; use the truncated (spin-zero) engine for larger systems");
    }
}

std::shared_ptr<const PostselectionOperator> cached_postselection(int n_qubits) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const PostselectionOperator>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n_qubits];
    if (!slot) {
        slot = std::make_shared<const PostselectionOperator>(build_postselection_operator(n_qubits));
    }
    return slot;
}

struct Normalized {
    Matrix matrix;
    double p_suc;
    double residual;
};

Normalized normalize_update(const Matrix& unnormalized) {
    const double p = unnormalized.trace().real();
    if (!(p >= kVanishingProbability)) throw VanishingProbability(p);
    const Matrix anti = 0.5 * (unnormalized - unnormalized.adjoint());
    const Matrix herm = 0.5 * (unnormalized + unnormalized.adjoint());
    return {herm / p, p, anti.norm() / p};
}

}  // namespace

// ============================================================================
// Local measurement
// ============================================================================

int schur_index(HalfInteger j, int alpha, HalfInteger m) {
    // 5j + 2alpha - m - 4 in doubled units
    const int twice = 5 * j.twice() + 4 * alpha - m.twice() - 8;
    return twice / 2;
}

Matrix schur_unitary() {
    const auto basis = coupled_basis(3);
    Matrix u = Matrix::Zero(kLocalDim, kLocalDim);
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const auto& e = basis->entry(i);
        u.row(schur_index(e.s, e.alpha, e.m)) =
            basis->unitary().col(static_cast<Eigen::Index>(i)).adjoint();
    }
    return u;
}

LocalPovmElement local_povm(HalfInteger j, int alpha) {
    require_sector(j, alpha);
    const auto basis = coupled_basis(3);
    Matrix m = Matrix::Zero(kLocalDim, kLocalDim);
    for (int tm = j.twice(); tm >= -j.twice(); tm -= 2) {
        const HalfInteger mm = HalfInteger::halves(tm);
        m.row(schur_index(j, alpha, mm)) = basis->vector(j, alpha, mm).amplitudes().adjoint();
    }
    return {j, alpha, std::move(m)};
}

Matrix effective_postselect_local() {
    const auto basis = coupled_basis(3);
    Matrix m(2, kLocalDim);
    m.row(0) = basis->vector(kHalf, 1, kHalf).amplitudes().adjoint();
    m.row(1) = basis->vector(kHalf, 1, -kHalf).amplitudes().adjoint();
    return m;
}

std::uint64_t copy_to_site_major(std::uint64_t index, int n_sites) {
    const int total = 3 * n_sites;
    std::uint64_t out = 0;
    for (int d = 0; d < 3; ++d) {
        for (int s = 0; s < n_sites; ++s) {
            const std::uint64_t bit = (index >> (total - 1 - (d * n_sites + s))) & 1U;
            out |= bit << (total - 1 - (3 * s + d));
        }
    }
    return out;
}

PostselectionOperator build_postselection_operator(int n_qubits) {
    require_even_engine(n_qubits, kMaxFullEngineQubits, "build_postselection_operator");
    const Matrix local = effective_postselect_local();
    const auto rows = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
    const auto cols = static_cast<Eigen::Index>(hilbert_dim(3 * n_qubits));
    const auto& table = site_major_table(n_qubits);
    Matrix m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        const std::uint64_t sm = table[static_cast<std::size_t>(c)];
        for (Eigen::Index k = 0; k < rows; ++k) {
            Complex v = 1.0;
            for (int s = 0; s < n_qubits && v != 0.0; ++s) {
                const int t = static_cast<int>((sm >> (3 * (n_qubits - 1 - s))) & 7U);
                const int bit = static_cast<int>((k >> (n_qubits - 1 - s)) & 1);
                v *= local(bit, t);
            }
            m(k, c) = v;
        }
    }
    return {n_qubits, std::move(m)};
}

Vector apply_postselection(const Vector& copy_major, int n_sites) {
    if (n_sites < 1 || n_sites > kMaxTruncatedQubits) {
        throw InvalidArgument("apply_postselection: unsupported site count");
    }
    if (static_cast<std::uint64_t>(copy_major.size()) != hilbert_dim(3 * n_sites)) {
        throw InvalidArgument("apply_postselection: vector length must be 2^(3N)");
    }
    const auto& table = site_major_table(n_sites);
    Vector site_major(copy_major.size());
    for (Eigen::Index c = 0; c < copy_major.size(); ++c) {
        site_major(static_cast<Eigen::Index>(table[static_cast<std::size_t>(c)])) = copy_major(c);
    }
    return contract_sites(std::move(site_major), n_sites, effective_postselect_local());
}

Matrix contract_three_copies(const Matrix& k, const Matrix& rho) {
    const Eigen::Index d = rho.rows();
    if (rho.cols() != d || k.cols() != d * d * d) {
        throw InvalidArgument("contract_three_copies: operator width must be dim(rho)^3");
    }
    const Eigen::Index rows = k.rows();
    Matrix y = k;
    Matrix gathered(rows, d);
    // Right-multiply by rho on each copy index; stride d^2, d, 1 for copies 1, 2, 3.
    for (const Eigen::Index stride : {d * d, d, Eigen::Index{1}}) {
        for (Eigen::Index base = 0; base < d * d * d; ++base) {
            if ((base / stride) % d != 0) continue;
            for (Eigen::Index q = 0; q < d; ++q) gathered.col(q) = y.col(base + q * stride);
            const Matrix updated = gathered * rho;
            for (Eigen::Index q = 0; q < d; ++q) y.col(base + q * stride) = updated.col(q);
        }
    }
    return y * k.adjoint();
}

// ============================================================================
// Full engine
// ============================================================================

FullStep distill_step_full(const DensityMatrix& rho) {
    require_even_engine(rho.n_qubits(), kMaxFullEngineQubits, "distill_step_full");
    const auto op = cached_postselection(rho.n_qubits());
    const Normalized upd = normalize_update(contract_three_copies(op->matrix, rho.matrix()));
    return {DensityMatrix(rho.n_qubits(), upd.matrix), upd.p_suc, upd.residual};
}

// ============================================================================
// Truncated engine
// ============================================================================

SpinZeroState::SpinZeroState(int n_qubits, Matrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    if (n_qubits < 2 || n_qubits % 2 != 0 || n_qubits > kMaxTruncatedQubits) {
        throw InvalidArgument("SpinZeroState: qubit count must be even and at most " +
                              std::to_string(kMaxTruncatedQubits));
    }
    basis_ = coupled_basis(n_qubits);
    const auto a0 = static_cast<Eigen::Index>(multiplicity(n_qubits, HalfInteger{}));
    if (matrix_.rows() != a0 || matrix_.cols() != a0) {
        throw InvalidArgument("SpinZeroState: matrix must be A(N,0) x A(N,0) = " +
                              std::to_string(a0) + " square");
    }
    if (max_abs_diff(matrix_, matrix_.adjoint()) > kAlgebraTol) {
        throw InvalidArgument("SpinZeroState: matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - 1.0) > kAlgebraTol) {
        throw InvalidArgument("SpinZeroState: trace must be 1");
    }
}

SpinZeroState SpinZeroState::from_density(const DensityMatrix& rho, double tolerance) {
    const auto basis = coupled_basis(rho.n_qubits());
    const Matrix b = basis->spin_zero_columns();
    const Matrix reduced = b.adjoint() * rho.matrix() * b;
    const double inside = reduced.trace().real();
    if (1.0 - inside > tolerance) {
        throw InvalidArgument("state has weight " + std::to_string(1.0 - inside) +
                              " outside the spin-zero sector; the truncated engine requires a "
                              "spin-zero input");
    }
    const Matrix herm = 0.5 * (reduced + reduced.adjoint());
    return {rho.n_qubits(), herm / inside};
}

DensityMatrix SpinZeroState::embed() const {
    const Matrix b = basis_columns();
    const Matrix full = b * matrix_ * b.adjoint();
    return {n_qubits_, 0.5 * (full + full.adjoint())};
}

double nonzero_spin_weight(const DensityMatrix& rho) {
    if (rho.n_qubits() % 2 != 0) return 1.0;
    const Matrix b = coupled_basis(rho.n_qubits())->spin_zero_columns();
    return 1.0 - (b.adjoint() * rho.matrix() * b).trace().real();
}

OmegaTensor build_omega_tensor(int n_qubits) {
    require_even_engine(n_qubits, kMaxTruncatedQubits, "build_omega_tensor");
    const Matrix b = coupled_basis(n_qubits)->spin_zero_columns();
    const auto a0 = static_cast<int>(b.cols());
    const Eigen::Index dim = b.rows();
    const Matrix local = effective_postselect_local();
    const auto& table = site_major_table(n_qubits);

    OmegaTensor omega{n_qubits, a0, Matrix(dim, Eigen::Index{a0} * a0 * a0)};
    Vector site_major(dim * dim * dim);
    for (int a1 = 0; a1 < a0; ++a1) {
        for (int a2 = 0; a2 < a0; ++a2) {
            Vector pair(dim * dim);
            for (Eigen::Index i1 = 0; i1 < dim; ++i1) {
                pair.segment(i1 * dim, dim) = b(i1, a1) * b.col(a2);
            }
            for (int a3 = 0; a3 < a0; ++a3) {
                // copy-major |a1, a2, a3> scattered straight into site-major order
                const auto col3 = b.col(a3);
                for (Eigen::Index p = 0; p < dim * dim; ++p) {
                    const Complex w = pair(p);
                    const std::size_t off = static_cast<std::size_t>(p * dim);
                    for (Eigen::Index i3 = 0; i3 < dim; ++i3) {
                        site_major(table[off + static_cast<std::size_t>(i3)]) = w * col3(i3);
                    }
                }
                omega.values.col((a1 * a0 + a2) * a0 + a3) =
                    contract_sites(site_major, n_qubits, local);
            }
        }
    }
    return omega;
}

std::shared_ptr<const OmegaTensor> omega_tensor(int n_qubits) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const OmegaTensor>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n_qubits];
    if (!slot) slot = std::make_shared<const OmegaTensor>(build_omega_tensor(n_qubits));
    return slot;
}

TruncatedStep distill_step_truncated(const SpinZeroState& state) {
    const auto omega = omega_tensor(state.n_qubits());
    const Matrix b = state.basis_columns();
    // sum over k, k' of Omega_k (rho x rho x rho) Omega_k'^*, then <alpha|k> ... <k'|alpha'>
    const Matrix full = contract_three_copies(omega->values, state.matrix());
    const double p = full.trace().real();
    if (!(p >= kVanishingProbability)) throw VanishingProbability(p);
    const Matrix reduced = b.adjoint() * full * b;
    const Normalized upd = normalize_update(reduced);
    // leakage out of the s = 0 sector shows up as the trace gap
    const double leak = std::abs(p - upd.p_suc) / p;
    return {SpinZeroState(state.n_qubits(), upd.matrix), p, upd.residual + leak};
}

// ============================================================================
// Fidelity
// ============================================================================

double fidelity(const DensityMatrix& rho) {
    return rho.expectation(supersinglet(rho.n_qubits()));
}

double fidelity(const SpinZeroState& state) {
    const Vector c = state.basis_columns().adjoint() * supersinglet(state.n_qubits()).amplitudes();
    return c.dot(state.matrix() * c).real();
}

}  // namespace supersinglet
