// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

#include "supersinglet/validation.hpp"

#include "supersinglet/channels.hpp"
#include "supersinglet/distillation.hpp"
#include "supersinglet/random_states.hpp"
#include "supersinglet/spin_algebra.hpp"
#include "supersinglet/state_factory.hpp"

#include <algorithm>
#include <cstdio>

namespace supersinglet {

namespace {

constexpr std::uint64_t kSeed = 20260514;

struct Runner {
    std::string suite;
    const std::function<void(const CheckResult&)>& progress;
    std::vector<CheckResult>& out;

    /// Records `value < bound`.
    void bound(const std::string& name, double value, double bound) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.3e < %.0e", value, bound);
        push({suite, name, value < bound, buf});
    }
    void flag(const std::string& name, bool ok, std::string detail) {
        push({suite, name, ok, std::move(detail)});
    }
    void push(CheckResult r) {
        out.push_back(std::move(r));
        if (progress) progress(out.back());
    }
};

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double spin_residual(const Matrix& op, const Vector& v, double eigen) {
    return (op * v - eigen * v).norm();
}

void algebra_suite(Runner& r) {
    for (int n = 1; n <= 8; ++n) {
        long long total = 0;
        for (HalfInteger s : allowed_spins(n)) total += (s.twice() + 1) * multiplicity(n, s);
        r.flag("dimension count N=" + std::to_string(n),
               total == static_cast<long long>(hilbert_dim(n)),
               std::to_string(total) + " == 2^" + std::to_string(n));
    }
    for (int n = 1; n <= 6; ++n) {
        const auto basis = coupled_basis(n);
        const Matrix& u = basis->unitary();
        const auto d = u.rows();
        r.bound("coupled basis unitary N=" + std::to_string(n),
                max_abs_diff(u.adjoint() * u, Matrix::Identity(d, d)), kAlgebraTol);
        const SpinOperatorSet ops = total_spin_operators(n);
        double worst = 0.0;
        for (std::size_t i = 0; i < basis->size(); ++i) {
            const auto& e = basis->entry(i);
            const Vector v = u.col(static_cast<Eigen::Index>(i));
            worst = std::max({worst, spin_residual(ops.s_squared, v, e.s.casimir()),
                              spin_residual(ops.sz, v, e.m.value())});
        }
        r.bound("coupled basis eigenvectors N=" + std::to_string(n), worst, kAlgebraTol);
    }
    for (int n : {4, 6}) {
        const Vector s = supersinglet(n).amplitudes();
        const SpinOperatorSet all = total_spin_operators(n);
        const SpinOperatorSet g1 = group_spin_operators(n, {1, n / 2});
        const SpinOperatorSet g2 = group_spin_operators(n, {n / 2 + 1, n});
        const double q = n / 4.0;
        const double worst = std::max({spin_residual(all.s_squared, s, 0.0), spin_residual(all.sz, s, 0.0),
                                       spin_residual(g1.s_squared, s, q * (q + 1)),
                                       spin_residual(g2.s_squared, s, q * (q + 1))});
        r.bound("supersinglet spin eigenvalues N=" + std::to_string(n), worst, kAlgebraTol);
    }
}

void channels_suite(Runner& r) {
    std::mt19937_64 rng(kSeed);
    for (int n : {2, 3}) {
        double mc = 0.0;
        double idem = 0.0;
        for (int k = 0; k < 3; ++k) {
            const DensityMatrix rho = random_density(n, rng);
            const DensityMatrix t = twirl(rho);
            mc = std::max(mc, max_abs_diff(t.matrix(),
                                           twirl_monte_carlo(rho, 10000, kSeed + 1000 * k).matrix()));
            idem = std::max({idem, max_abs_diff(twirl(t).matrix(), t.matrix()),
                             std::abs(t.matrix().trace().real() - 1.0)});
        }
        r.bound("Monte-Carlo twirl N=" + std::to_string(n), mc, 2e-2);
        r.bound("twirl idempotent and trace preserving N=" + std::to_string(n), idem, kAlgebraTol);
    }
    for (int n : {4, 6}) {
        const DensityMatrix s = DensityMatrix::pure(supersinglet(n));
        double worst = 0.0;
        for (const auto& p : supersinglet_symmetry_group(n)) {
            worst = std::max(worst, max_abs_diff(permute(p, s.matrix()), s.matrix()));
        }
        r.bound("supersinglet permutation symmetry N=" + std::to_string(n), worst, kAlgebraTol);
        r.bound("supersinglet twirl invariant N=" + std::to_string(n),
                max_abs_diff(twirl(s).matrix(), s.matrix()), kAlgebraTol);
    }
}

void engine_suite(Runner& r) {
    Matrix sum = Matrix::Zero(8, 8);
    for (auto [j, a] : {std::pair{HalfInteger::halves(3), 1}, {kHalf, 1}, {kHalf, 2}}) {
        const Matrix m = local_povm(j, a).matrix;
        sum += m.adjoint() * m;
    }
    r.bound("local POVM completeness", max_abs_diff(sum, Matrix::Identity(8, 8)), kAlgebraTol);

    std::mt19937_64 rng(kSeed);
    const Matrix local = effective_postselect_local();
    double inter = 0.0;
    for (int k = 0; k < 20; ++k) {
        const Matrix2 u = haar_su2(kSeed + static_cast<std::uint64_t>(k));
        inter = std::max(inter, max_abs_diff(local * kron(kron(u, u), u), u * local));
    }
    r.bound("local intertwiner M U^x3 = U M", inter, 1e-10);

    for (int n : {2, 4}) {
        const DensityMatrix s = DensityMatrix::pure(supersinglet(n));
        r.bound("full-engine fixed point N=" + std::to_string(n),
                trace_distance(distill_step_full(s).state.matrix(), s.matrix()), 1e-10);
    }
    for (int n : {2, 4, 6}) {
        const DensityMatrix s = DensityMatrix::pure(supersinglet(n));
        const auto out = distill_step_truncated(SpinZeroState::from_density(s));
        r.bound("truncated-engine fixed point N=" + std::to_string(n),
                trace_distance(out.state.embed().matrix(), s.matrix()), 1e-10);
    }
    double state_gap = 0.0;
    double prob_gap = 0.0;
    for (int k = 0; k < 5; ++k) {
        const DensityMatrix rho = random_spin_zero_density(4, rng);
        const FullStep full = distill_step_full(rho);
        const TruncatedStep trunc = distill_step_truncated(SpinZeroState::from_density(rho));
        state_gap = std::max(state_gap, trace_distance(full.state.matrix(), trunc.state.embed().matrix()));
        prob_gap = std::max(prob_gap, std::abs(full.success_probability - trunc.success_probability) /
                                          full.success_probability);
    }
    r.bound("truncated vs full state N=4", state_gap, 1e-10);
    r.bound("truncated vs full p_suc N=4", prob_gap, 1e-10);
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view text) {
    if (text == "algebra") return Suite::algebra;
    if (text == "channels") return Suite::channels;
    if (text == "engine") return Suite::engine;
    if (text == "all") return Suite::all;
    return std::nullopt;
}

std::vector<CheckResult> run_validation(Suite suite,
                                        const std::function<void(const CheckResult&)>& progress) {
    std::vector<CheckResult> out;
    if (suite == Suite::algebra || suite == Suite::all) {
        Runner r{"algebra", progress, out};
        algebra_suite(r);
    }
    if (suite == Suite::channels || suite == Suite::all) {
        Runner r{"channels", progress, out};
        channels_suite(r);
    }
    if (suite == Suite::engine || suite == Suite::all) {
        Runner r{"engine", progress, out};
        engine_suite(r);
    }
    return out;
}

}  // namespace supersinglet
