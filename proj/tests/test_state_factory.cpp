// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracle_constants.hpp"
#include "reference_states.hpp"
#include "test_support.hpp"

#include "supersinglet/channels.hpp"
#include "supersinglet/spin_algebra.hpp"
#include "supersinglet/state_factory.hpp"

#include <doctest.h>

namespace supersinglet {

TEST_SUITE("state_factory") {

TEST_CASE("density matrix construction is validated") {
    CHECK_THROWS_AS(DensityMatrix(1, Matrix::Identity(2, 2)), InvalidArgument);  // trace 2
    Matrix neg = Matrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix(1, neg), InvalidArgument);
    Matrix nonherm = 0.5 * Matrix::Identity(2, 2);
    nonherm(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix(1, nonherm), InvalidArgument);
    CHECK_THROWS_AS(DensityMatrix(2, 0.5 * Matrix::Identity(2, 2)), InvalidArgument);
    CHECK_THROWS_AS(StateVector(2, Vector::Zero(3)), InvalidArgument);
}

TEST_CASE("Dicke states") {
    const StateVector d = dicke_state(3, 1);
    CHECK(d.is_normalized());
    CHECK(std::abs(d[0b001] - 1 / std::sqrt(3.0)) < kAlgebraTol);
    CHECK(std::abs(d[0b011]) == 0.0);
    CHECK(std::abs(dicke_state(2, 2)[0b11] - 1.0) < kAlgebraTol);
    CHECK_THROWS_AS((void)dicke_state(2, 3), InvalidArgument);
    CHECK_THROWS_AS((void)dicke_state(0, 0), InvalidArgument);
}

TEST_CASE("supersinglet amplitudes match the literal listings") {
    CHECK(max_abs_diff(supersinglet(4).amplitudes(), reference::supersinglet4()) < kAlgebraTol);
    CHECK(max_abs_diff(supersinglet(6).amplitudes(), reference::supersinglet6()) < kAlgebraTol);
}

TEST_CASE("two-qubit supersinglet is the singlet up to phase") {
    const Vector singlet = reference::from_terms({{"01", 1}, {"10", -1}}, 1 / std::sqrt(2.0));
    CHECK(testing::distance_up_to_phase(supersinglet(2).amplitudes(), singlet) < kAlgebraTol);
    CHECK(testing::distance_up_to_phase(singlet_chain(2).amplitudes(), singlet) < kAlgebraTol);
}

TEST_CASE("supersinglet is a spin singlet with maximal group spins") {
    for (int n : {2, 4, 6, 8}) {
        CAPTURE(n);
        const Vector s = supersinglet(n).amplitudes();
        CHECK(s.norm() == doctest::Approx(1.0));
        const auto all = total_spin_operators(n);
        CHECK((all.s_squared * s).norm() < kAlgebraTol);
        CHECK((all.sz * s).norm() < kAlgebraTol);
        const double q = n / 4.0;
        const auto g1 = group_spin_operators(n, {1, n / 2});
        CHECK((g1.s_squared * s - q * (q + 1) * s).norm() < kAlgebraTol);
    }
}

TEST_CASE("singlet chain and pairings") {
    const StateVector chain = singlet_chain(4);
    CHECK(chain.is_normalized());
    const double overlap = std::norm(chain.inner(supersinglet(4)));
    CHECK(overlap == doctest::Approx(oracle::kChainOverlapN4).epsilon(1e-14));
    // pair 1-4, 2-3
    const StateVector crossed = singlet_pairing(4, {2, 1});
    CHECK(std::abs(crossed[0b0101]) == doctest::Approx(0.5));
    CHECK(std::abs(crossed[0b0110]) == 0.0);
    CHECK(std::abs(chain[0b0101]) == 0.0);
    CHECK_THROWS_AS((void)singlet_pairing(4, {1, 1}), InvalidArgument);
    CHECK_THROWS_AS((void)singlet_pairing(4, {1}), InvalidArgument);
    CHECK_THROWS_AS((void)singlet_chain(3), InvalidArgument);
}

TEST_CASE("symmetrized singlet initial state") {
    const DensityMatrix rho = symmetrized_singlet_init(4);
    CHECK(rho.expectation(supersinglet(4)) == doctest::Approx(oracle::kRho3Fidelity0N4).epsilon(1e-14));
    CHECK(symmetrized_singlet_init(6).expectation(supersinglet(6)) ==
          doctest::Approx(oracle::kRho3Fidelity0N6).epsilon(1e-14));
    const auto group = group_two_permutations(4);
    CHECK(max_abs_diff(symmetrize(rho, group).matrix(), rho.matrix()) < kAlgebraTol);
}

TEST_CASE("modified GHZ") {
    const StateVector g = modified_ghz(4);
    CHECK(std::abs(g[0b1100] - 1 / std::sqrt(2.0)) < kAlgebraTol);
    CHECK(std::abs(g[0b0011] - 1 / std::sqrt(2.0)) < kAlgebraTol);
    CHECK(std::norm(g.inner(supersinglet(4))) ==
          doctest::Approx(oracle::kGhzOverlapN4).epsilon(1e-13));
    // odd half: relative minus sign
    const StateVector g6 = modified_ghz(6);
    CHECK(std::abs(g6[0b000111] + 1 / std::sqrt(2.0)) < kAlgebraTol);
}

TEST_CASE("Werner mixture") {
    const DensityMatrix w = werner_mix(DensityMatrix::pure(supersinglet(4)), 0.1);
    CHECK(w.expectation(supersinglet(4)) == doctest::Approx(0.9 + 0.1 / 16));
    CHECK_THROWS_AS((void)werner_mix(w, -0.1), InvalidArgument);
    CHECK_THROWS_AS((void)werner_mix(w, 1.5), InvalidArgument);
}

TEST_CASE("spin-zero mixture") {
    CHECK(s0_mixture(4, 0.0).expectation(supersinglet(4)) == doctest::Approx(0.5));
    CHECK(s0_mixture(4, 1.0).expectation(supersinglet(4)) == doctest::Approx(1.0));
    CHECK(s0_mixture(6, 0.0).expectation(supersinglet(6)) == doctest::Approx(0.2));
    // delta = -0.2 stays positive for N = 4: weight 0.6 - 0.2 on |S>
    CHECK(s0_mixture(4, -0.2).min_eigenvalue() > -kPositivityTol);
    CHECK_THROWS_AS((void)s0_mixture(4, -2.0), InvalidArgument);
    CHECK_THROWS_AS((void)s0_mixture(4, 1.5), InvalidArgument);
}

TEST_CASE("mixture recipe validation") {
    MixtureRecipe bad{{{0.5, supersinglet(2)}, {0.6, DensityMatrix::maximally_mixed(2)}}};
    CHECK_THROWS_AS((void)bad.assemble(), InvalidArgument);
    MixtureRecipe negative{{{-0.5, supersinglet(2)}, {1.5, DensityMatrix::maximally_mixed(2)}}};
    CHECK_THROWS_AS((void)negative.assemble(), InvalidArgument);
    MixtureRecipe mismatch{{{0.5, supersinglet(2)}, {0.5, DensityMatrix::maximally_mixed(4)}}};
    CHECK_THROWS_AS((void)mismatch.assemble(), InvalidArgument);
    CHECK_THROWS_AS((void)MixtureRecipe{}.assemble(), InvalidArgument);
}

}

}  // namespace supersinglet
