#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fock/applications.hpp"
#include "fock/errors.hpp"
#include "fock/photon_removal.hpp"
#include "fock/random_states.hpp"
#include "fock/subset_states.hpp"

using namespace fock;

TEST_CASE("purity straight off the term map") {
    BeamState pure = BeamState::pure(
        1, {{OccupationVector{0}, {1.0, 0.0}}, {OccupationVector{2}, {0.0, 1.0}}});
    CHECK(purity_direct(pure) == doctest::Approx(1.0).epsilon(1e-14));
    BeamState mix = BeamState::ket_bra(OccupationVector{0}, OccupationVector{0}, {0.5, 0.0})
                        .plus(BeamState::ket_bra(OccupationVector{1}, OccupationVector{1},
                                                 {0.5, 0.0}));
    CHECK(purity_direct(mix) == doctest::Approx(0.5));
}

TEST_CASE("reduced purity of a photon pair is one half") {
    BeamState pair = BeamState::ket_bra(OccupationVector{1, 1}, OccupationVector{1, 1});
    CHECK(reduced_purity_formula(pair, 2, 1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("all photons in one mode reduce to a pure state") {
    for (int N = 2; N <= 5; ++N) {
        BeamState bunch = BeamState::ket_bra(OccupationVector{N, 0}, OccupationVector{N, 0});
        for (int q = 1; q < N; ++q)
            CHECK(reduced_purity_formula(bunch, N, q) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("moment formula matches the reduced state's purity") {
    Rng rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        int N = 2 + trial % 3;
        BeamState psi = random_pure_fixed_N(2, N, rng);
        for (int q = 1; q <= N; ++q)
            CHECK(reduced_purity_formula(psi, N, q) ==
                  doctest::Approx(purity_direct(subset_of_fixed_N(psi, N, q))).epsilon(1e-10));
    }
}

TEST_CASE("reduced purity preconditions") {
    BeamState mix = BeamState::ket_bra(OccupationVector{1, 0}, OccupationVector{1, 0}, {0.5, 0.0})
                        .plus(BeamState::ket_bra(OccupationVector{0, 1}, OccupationVector{0, 1},
                                                 {0.5, 0.0}));
    CHECK_THROWS_AS(reduced_purity_formula(mix, 1, 1), FockError);  // not pure
    BeamState pair = BeamState::ket_bra(OccupationVector{1, 1}, OccupationVector{1, 1});
    CHECK_THROWS_AS(reduced_purity_formula(pair, 2, 3), FockError);
    BeamState spread = BeamState::pure(
        1, {{OccupationVector{1}, {1.0, 0.0}}, {OccupationVector{2}, {1.0, 0.0}}});
    CHECK_THROWS_AS(reduced_purity_formula(spread, 2, 1), FockError);  // not fixed N
}

TEST_CASE("Stokes parameters of elementary beams") {
    BeamState h = BeamState::ket_bra(OccupationVector{1, 0}, OccupationVector{1, 0});
    StokesVector sh = stokes(h);
    CHECK(sh.s0 == doctest::Approx(1.0));
    CHECK(sh.s1 == doctest::Approx(1.0));
    CHECK(sh.s2 == doctest::Approx(0.0));
    CHECK(sh.s3 == doctest::Approx(0.0));

    StokesVector spair = stokes(BeamState::ket_bra(OccupationVector{1, 1}, OccupationVector{1, 1}));
    CHECK(spair.s0 == doctest::Approx(2.0));
    CHECK(spair.vector_norm() == doctest::Approx(0.0));

    BeamState diag = BeamState::pure(
        2, {{OccupationVector{1, 0}, {1.0, 0.0}}, {OccupationVector{0, 1}, {1.0, 0.0}}});
    StokesVector sd = stokes(diag);
    CHECK(sd.s1 == doctest::Approx(0.0));
    CHECK(sd.s2 == doctest::Approx(1.0));
    CHECK(sd.s3 == doctest::Approx(0.0));

    BeamState circ = BeamState::pure(
        2, {{OccupationVector{1, 0}, {1.0, 0.0}}, {OccupationVector{0, 1}, {0.0, 1.0}}});
    StokesVector sc = stokes(circ);
    CHECK(sc.s2 == doctest::Approx(0.0));
    CHECK(std::abs(sc.s3) == doctest::Approx(1.0));

    CHECK_THROWS_AS(stokes(BeamState::vacuum(3)), FockError);
}

TEST_CASE("single-photon Bloch vector equals the normalized Stokes vector") {
    BeamState h = BeamState::ket_bra(OccupationVector{1, 0}, OccupationVector{1, 0});
    auto b = bloch_of_random_photon(h);
    CHECK(b[0] == doctest::Approx(1.0));
    CHECK(b[1] == doctest::Approx(0.0));
    CHECK(b[2] == doctest::Approx(0.0));

    for (unsigned long long seed = 11; seed <= 15; ++seed) {
        BeamState rho = random_state(2, 3, StateKind::CrossCoherent, seed);
        StokesVector s = stokes(rho);
        if (s.s0 < 1e-9) continue;
        auto bloch = bloch_of_random_photon(rho);
        CHECK(bloch[0] == doctest::Approx(s.s1 / s.s0).epsilon(1e-11));
        CHECK(bloch[1] == doctest::Approx(s.s2 / s.s0).epsilon(1e-11));
        CHECK(bloch[2] == doctest::Approx(s.s3 / s.s0).epsilon(1e-11));
    }
}

TEST_CASE("one-photon subset purity tracks the Bloch length") {
    // the q = 1 subset of a two-mode beam is a qubit, so its purity must be
    // (1 + |b|^2)/2 exactly
    for (unsigned long long seed = 21; seed <= 26; ++seed) {
        BeamState rho = random_state(2, 4, StateKind::Mixed, seed);
        auto b = bloch_of_random_photon(rho);
        double b2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
        double direct = purity_direct(random_subset_state_direct(rho, 1));
        CHECK(direct == doctest::Approx((1.0 + b2) / 2.0).epsilon(1e-11));
    }
}

TEST_CASE("projector series terminates onto the exact probabilities") {
    BeamState plus = BeamState::pure(
        1, {{OccupationVector{0}, {1.0, 0.0}}, {OccupationVector{1}, {1.0, 0.0}}});
    auto [p0, d0] = projector_expectation_series(plus, 0);
    CHECK(p0 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(d0 == doctest::Approx(0.5).epsilon(1e-14));

    auto [pv, dv] = projector_expectation_series(BeamState::vacuum(1), 0);
    CHECK(pv == doctest::Approx(1.0));
    CHECK(dv == doctest::Approx(1.0));

    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        BeamState rho = random_mixed_block_diagonal(1, 4, 3, rng);
        for (int m = 0; m <= 4; ++m) {
            auto [series, direct] = projector_expectation_series(rho, m);
            CHECK(series == doctest::Approx(direct).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(projector_expectation_series(
                        BeamState::ket_bra(OccupationVector{1, 0}, OccupationVector{1, 0}), 0),
                    FockError);
}
