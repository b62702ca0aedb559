// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracle_constants.hpp"
#include "reference_states.hpp"

#include "supersinglet/channels.hpp"
#include "supersinglet/distillation.hpp"
#include "supersinglet/experiment.hpp"
#include "supersinglet/random_states.hpp"
#include "supersinglet/spin_algebra.hpp"
#include "supersinglet/state_factory.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace supersinglet {
namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    /// Records `value < bound` under `label`.
    void below(const std::string& label, double value, double bound) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s %.2e < %.0e", label.c_str(), value, bound);
        note(value < bound, buf);
    }
    void note(bool ok, const std::string& text) {
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += ok ? text : "FAILED " + text;
    }
};

struct Criterion {
    int id;
    const char* title;
    double time_limit_s;  ///< <= 0: no runtime bound
    std::function<Outcome()> run;
};

double op_norm(const Matrix& m) {
    return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

double residual(const Matrix& op, const Vector& v, double eigen) {
    return (op * v - eigen * v).norm();
}

std::vector<double> fidelities(const ScenarioResult& r) {
    std::vector<double> f;
    for (const auto& rec : r.records) f.push_back(rec.fidelity);
    return f;
}

bool strictly_increasing(const std::vector<double>& f) {
    return std::adjacent_find(f.begin(), f.end(), std::greater_equal<>()) == f.end();
}

bool strictly_decreasing(const std::vector<double>& f) {
    return std::adjacent_find(f.begin(), f.end(), std::less_equal<>()) == f.end();
}

std::string fmt(const char* pattern, double v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

/// First iteration with fidelity above `target`, or -1.
int first_above(const ScenarioResult& r, double target) {
    for (const auto& rec : r.records) {
        if (rec.fidelity > target) return rec.iteration;
    }
    return -1;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// ----------------------------------------------------------------------------

Outcome wavefunctions() {
    Outcome o;
    o.below("N=4 max amplitude deviation",
            max_abs_diff(supersinglet(4).amplitudes(), reference::supersinglet4()), 1e-12);
    o.below("N=6 max amplitude deviation",
            max_abs_diff(supersinglet(6).amplitudes(), reference::supersinglet6()), 1e-12);
    return o;
}

Outcome three_qubit_basis() {
    Outcome o;
    const auto basis = coupled_basis(3);
    o.below("j=3/2 projector distance",
            op_norm(basis->branch_projector(HalfInteger::halves(3), 1) -
                    reference::projector(reference::three_halves())),
            1e-12);
    o.below("j=1/2 a=1 projector distance",
            op_norm(basis->branch_projector(kHalf, 1) - reference::projector(reference::half_alpha1())),
            1e-12);
    o.below("j=1/2 a=2 projector distance",
            op_norm(basis->branch_projector(kHalf, 2) - reference::projector(reference::half_alpha2())),
            1e-12);
    return o;
}

Outcome supersinglet_invariants() {
    Outcome o;
    std::mt19937_64 rng(2026);
    for (int n : {4, 6}) {
        const std::string tag = "N=" + std::to_string(n) + " ";
        const Vector s = supersinglet(n).amplitudes();
        const auto all = total_spin_operators(n);
        const auto g1 = group_spin_operators(n, {1, n / 2});
        const auto g2 = group_spin_operators(n, {n / 2 + 1, n});
        const double q = n / 4.0;
        o.below(tag + "S^2 residual", residual(all.s_squared, s, 0.0), 1e-12);
        o.below(tag + "Sz residual", residual(all.sz, s, 0.0), 1e-12);
        o.below(tag + "group spin residual",
                std::max(residual(g1.s_squared, s, q * (q + 1)), residual(g2.s_squared, s, q * (q + 1))),
                1e-12);

        const auto group = supersinglet_symmetry_group(n);
        std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
        double perm = 0.0;
        for (int k = 0; k < 20; ++k) {
            const auto& p = group[pick(rng)];
            const bool swaps = p(1) > n / 2;
            const double sign = (swaps && (n / 2) % 2 == 1) ? -1.0 : 1.0;
            perm = std::max(perm, max_abs_diff(permute(p, supersinglet(n)).amplitudes(), sign * s));
        }
        o.below(tag + "permutation symmetry (20 draws)", perm, 1e-12);

        double var = 0.0;
        for (const Matrix* op : {&all.sx, &all.sy, &all.sz}) {
            const double mean = s.dot(*op * s).real();
            const double second = s.dot(*op * (*op * s)).real();
            var = std::max(var, std::abs(second - mean * mean));
        }
        o.below(tag + "max Var(S^i)", var, 1e-12);
    }
    return o;
}

Outcome twirl_checks() {
    Outcome o;
    std::mt19937_64 rng(4242);
    double mc = 0.0;
    double idem = 0.0;
    double werner = 0.0;
    const Matrix singlet = DensityMatrix::pure(supersinglet(2)).matrix();
    for (int n : {2, 3}) {
        for (int k = 0; k < 5; ++k) {
            const DensityMatrix rho = random_density(n, rng);
            const DensityMatrix t = twirl(rho);
            const auto seed = static_cast<std::uint64_t>(100000 * n + 10000 * k);
            mc = std::max(mc, max_abs_diff(t.matrix(), twirl_monte_carlo(rho, 10000, seed).matrix()));
            idem = std::max({idem, max_abs_diff(twirl(t).matrix(), t.matrix()),
                             std::abs(t.matrix().trace().real() - 1.0)});
            if (n == 2) {
                const double f = rho.expectation(supersinglet(2));
                const Matrix expected = f * singlet + (1 - f) / 3 * (Matrix::Identity(4, 4) - singlet);
                werner = std::max({werner, max_abs_diff(t.matrix(), expected),
                                   std::abs(t.expectation(supersinglet(2)) - f)});
            }
        }
    }
    o.below("Monte-Carlo vs closed form (1e4 samples)", mc, 2e-2);
    o.below("idempotence / trace", idem, 1e-12);
    o.below("two-qubit Werner form", werner, 1e-12);
    return o;
}

Outcome fixed_point() {
    Outcome o;
    const DensityMatrix s4 = DensityMatrix::pure(supersinglet(4));
    o.below("full N=4 trace distance", trace_distance(distill_step_full(s4).state.matrix(), s4.matrix()),
            1e-10);
    for (int n : {4, 6}) {
        const DensityMatrix s = DensityMatrix::pure(supersinglet(n));
        const auto step = distill_step_truncated(SpinZeroState::from_density(s));
        o.below("truncated N=" + std::to_string(n) + " trace distance",
                trace_distance(step.state.embed().matrix(), s.matrix()), 1e-10);
    }
    // M U^(x12) = U^(x4) M, row by row: (M U^(x12))_r = (U^T)^(x12) applied to M_r
    const Matrix& m = build_postselection_operator(4).matrix;
    const Matrix local = effective_postselect_local();
    double global = 0.0;
    double site = 0.0;
    for (int k = 0; k < 10; ++k) {
        const Matrix2 u = haar_su2(777 + static_cast<std::uint64_t>(k));
        const Matrix2 ut = u.transpose();
        Matrix lhs(m.rows(), m.cols());
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            lhs.row(r) = rotate_all(Vector(m.row(r).transpose()), 12, ut).transpose();
        }
        Matrix rhs(m.rows(), m.cols());
        for (Eigen::Index c = 0; c < m.cols(); ++c) rhs.col(c) = rotate_all(Vector(m.col(c)), 4, u);
        global = std::max(global, max_abs_diff(lhs, rhs));
        Matrix l3(local.rows(), local.cols());
        for (Eigen::Index r = 0; r < local.rows(); ++r) {
            l3.row(r) = rotate_all(Vector(local.row(r).transpose()), 3, ut).transpose();
        }
        site = std::max(site, max_abs_diff(l3, u * local));
    }
    o.below("local intertwiner (10 SU(2) draws)", site, 1e-10);
    o.below("N=4 global intertwiner (10 SU(2) draws)", global, 1e-10);
    return o;
}

Outcome engine_equivalence() {
    Outcome o;
    std::mt19937_64 rng(9001);
    double state = 0.0;
    double prob = 0.0;
    for (int k = 0; k < 10; ++k) {
        const DensityMatrix rho = random_spin_zero_density(4, rng);
        const FullStep full = distill_step_full(rho);
        const TruncatedStep trunc = distill_step_truncated(SpinZeroState::from_density(rho));
        state = std::max(state, trace_distance(full.state.matrix(), trunc.state.embed().matrix()));
        prob = std::max(prob, std::abs(full.success_probability - trunc.success_probability) /
                                  full.success_probability);
    }
    o.below("trace distance", state, 1e-10);
    o.below("p_suc relative error", prob, 1e-10);
    return o;
}

Outcome fig2a() {
    Outcome o;
    const auto r = run_scenario("fig2a", {});
    const auto f = fidelities(r);
    o.note(!r.abort_reason && r.records.size() == 9, "9 records");
    o.note(strictly_increasing(f), "strictly increasing");
    const int hit = first_above(r, 0.999);
    o.note(hit >= 0 && hit <= 8, "F > 0.999 at iteration " + std::to_string(hit));
    o.below("|F0 - oracle|", std::abs(f.at(0) - oracle::kRho3Fidelity0N4), oracle::kRegressionTol);
    o.below("|F1 - oracle|", std::abs(f.at(1) - oracle::kRho3Fidelity1N4), oracle::kRegressionTol);
    o.below("|p1 - oracle|", std::abs(r.records.at(1).success_probability - oracle::kRho3Psuc1N4),
            oracle::kRegressionTol);
    return o;
}

Outcome fig2b() {
    Outcome o;
    const auto r = run_scenario("fig2b", {});
    const auto f = fidelities(r);
    o.note(!r.abort_reason && r.records.back().engine == EngineKind::truncated, "truncated engine");
    o.note(strictly_increasing(f), "strictly increasing");
    const int hit = first_above(r, 0.99);
    o.note(hit >= 0 && hit <= 10, "F > 0.99 at iteration " + std::to_string(hit));
    return o;
}

Outcome fig2c() {
    Outcome o;
    const auto r = run_scenario("fig2c", {});
    const auto f = fidelities(r);
    const auto peak = static_cast<std::size_t>(std::max_element(f.begin(), f.end()) - f.begin());
    const bool interior = peak > 0 && peak + 1 < f.size();
    o.note(!r.abort_reason && r.records.back().engine == EngineKind::full, "full engine");
    o.note(interior, "maximum at iteration " + std::to_string(peak) + fmt(" (F = %.6f)", f[peak]));
    o.note(interior && strictly_increasing({f.begin(), f.begin() + static_cast<long>(peak) + 1}) &&
               strictly_decreasing({f.begin() + static_cast<long>(peak), f.end()}),
           "rise then strict decrease");
    return o;
}

Outcome fig2d() {
    Outcome o;
    const auto up = fidelities(run_scenario("fig2d", {{"delta", "0.1"}}));
    const auto down = fidelities(run_scenario("fig2d", {{"delta", "-0.1"}}));
    const auto flat = fidelities(run_scenario("fig2d", {{"delta", "0"}}));
    o.note(strictly_increasing(up) && up.back() > 0.99,
           "delta=+0.1 increasing to" + fmt(" %.6f", up.back()));
    o.note(strictly_decreasing(down), "delta=-0.1 decreasing to" + fmt(" %.3e", down.back()));
    const auto [lo, hi] = std::minmax_element(flat.begin(), flat.end());
    o.note(flat.size() == 11, "delta=0 ran 10 iterations");
    o.below("delta=0 spread", *hi - *lo, 1e-10);
    return o;
}

Outcome fig2e() {
    Outcome o;
    const ProtocolConfig defaults = scenario_defaults("fig2e");
    const auto init_only = run_scenario("fig2e", {{"iterations", "12"}});
    const auto each = run_scenario("fig2e", {{"iterations", "12"}, {"twirl_each_iteration", "true"}});
    const int hit_init = first_above(init_only, 0.99);
    const int hit_each = first_above(each, 0.99);
    o.note(!defaults.twirl_each_iteration, "default placement: twirl at preparation only");
    o.note(hit_init >= 0 && hit_init <= 12,
           "init-only F > 0.99 at iteration " + std::to_string(hit_init) +
               fmt(", F12 = %.6f", init_only.records.back().fidelity));
    // reported, not required
    std::printf("    per-iteration placement: F > 0.99 at iteration %d, F12 = %.6f\n", hit_each,
                each.records.back().fidelity);
    return o;
}

Outcome determinism() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / "supersinglet_acceptance";
    std::filesystem::create_directories(dir);
    const Overrides seeded{{"seed", "12345"}};
    bool identical = true;
    for (const char* name : {"fig2a", "fig2c", "fig2e"}) {
        write_csv(run_scenario(name, seeded).records, dir / "first.csv");
        write_csv(run_scenario(name, seeded).records, dir / "second.csv");
        identical = identical && slurp(dir / "first.csv") == slurp(dir / "second.csv");
    }
    o.note(identical, "byte-identical CSV on repeat (fig2a, fig2c, fig2e)");
    const std::string text = slurp(dir / "first.csv");
    const std::string header = text.substr(0, text.find('\n'));
    o.note(header == "iteration,fidelity,success_probability,trace_residual,engine",
           "header '" + header + "'");
    o.note(text.find('\r') == std::string::npos, "LF line endings");
    std::filesystem::remove_all(dir);
    return o;
}

}  // namespace
}  // namespace supersinglet

int main() {
    using namespace std::chrono;
    namespace ss = supersinglet;
    const std::vector<ss::Criterion> criteria{
        {1, "supersinglet wavefunctions", 1.0, ss::wavefunctions},
        {2, "three-qubit coupled basis", 1.0, ss::three_qubit_basis},
        {3, "supersinglet invariants", 0.0, ss::supersinglet_invariants},
        {4, "twirl", 30.0, ss::twirl_checks},
        {5, "fixed point and intertwiner", 60.0, ss::fixed_point},
        {6, "engine equivalence", 0.0, ss::engine_equivalence},
        {7, "fig2a convergence", 60.0, ss::fig2a},
        {8, "fig2b convergence (N=6)", 60.0, ss::fig2b},
        {9, "fig2c maximum then decline", 300.0, ss::fig2c},
        {10, "fig2d threshold", 0.0, ss::fig2d},
        {11, "fig2e modified GHZ", 0.0, ss::fig2e},
        {12, "determinism and CSV format", 0.0, ss::determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = steady_clock::now();
        ss::Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.note(false, std::string("exception: ") + e.what());
        }
        const double secs = duration<double>(steady_clock::now() - start).count();
        if (c.time_limit_s > 0) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "runtime %.2f s < %.0f s", secs, c.time_limit_s);
            out.note(secs < c.time_limit_s, buf);
        }
        std::printf("criterion %2d %s  %-30s (%.2f s)  %s\n", c.id, out.pass ? "PASS" : "FAIL", c.title,
                    secs, out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
