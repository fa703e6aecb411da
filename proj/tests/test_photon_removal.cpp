#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fock/errors.hpp"
#include "fock/photon_removal.hpp"

using namespace fock;

namespace {
BeamState diag(const OccupationVector& n, double p) {
    return BeamState::ket_bra(n, n, Complex(p, 0.0));
}
}  // namespace

TEST_CASE("one photon off |2,0> leaves |1,0>") {
    BeamState rho = diag(OccupationVector{2, 0}, 1.0);
    BeamState out = remove_one_fixed_N(rho, 2);
    CHECK(out.term_count() == 1);
    CHECK(out.amplitude(OccupationVector{1, 0}, OccupationVector{1, 0}) == Complex(1.0, 0.0));
    CHECK(out.trace() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("one photon off |1,1> forgets which mode survived") {
    BeamState rho = diag(OccupationVector{1, 1}, 1.0);
    BeamState out = remove_one_fixed_N(rho, 2);
    CHECK(out.amplitude(OccupationVector{1, 0}, OccupationVector{1, 0}).real() ==
          doctest::Approx(0.5));
    CHECK(out.amplitude(OccupationVector{0, 1}, OccupationVector{0, 1}).real() ==
          doctest::Approx(0.5));
    CHECK(out.term_count() == 2);
}

TEST_CASE("removal destroys NOON coherence") {
    BeamState noon = BeamState::pure(
        2, {{OccupationVector{2, 0}, {1.0, 0.0}}, {OccupationVector{0, 2}, {1.0, 0.0}}});
    BeamState out = remove_one_fixed_N(noon, 2);
    CHECK(out.amplitude(OccupationVector{1, 0}, OccupationVector{1, 0}).real() ==
          doctest::Approx(0.5));
    CHECK(out.amplitude(OccupationVector{1, 0}, OccupationVector{0, 1}) == Complex(0.0, 0.0));
    CHECK(out.trace() == doctest::Approx(1.0));
}

TEST_CASE("general removal maps the cross term |2><1| to |1><0|") {
    // a (N-hat)^(-1/2) |2><1| (N-hat)^(-1/2) a-dag
    //   = (1/sqrt 2)(1/sqrt 1) sqrt(2) sqrt(1) |1><0| = |1><0|
    BeamState raw = BeamState::ket_bra(OccupationVector{2}, OccupationVector{1});
    BeamState out = detail::remove_one_inverse_first(raw);
    CHECK(out.term_count() == 1);
    CHECK(out.amplitude(OccupationVector{1}, OccupationVector{0}).real() ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("the two general-removal orderings agree") {
    BeamState rho = BeamState::pure(2, {{OccupationVector{0, 0}, {1.0, 0.0}},
                                        {OccupationVector{1, 0}, {0.0, 1.0}},
                                        {OccupationVector{1, 1}, {-0.5, 0.5}},
                                        {OccupationVector{2, 1}, {0.7, 0.0}}});
    CHECK(max_abs_difference(detail::remove_one_inverse_first(rho),
                             detail::remove_one_inverse_last(rho)) < 1e-14);
}

TEST_CASE("vacuum weight is annihilated, not renormalized") {
    BeamState rho = diag(OccupationVector{0}, 0.5).plus(diag(OccupationVector{1}, 0.5));
    RemovalResult result = remove_one_general(rho);
    CHECK(result.removed == 1);
    CHECK(result.trace_retained == doctest::Approx(0.5));
    CHECK(result.state.amplitude(OccupationVector{0}, OccupationVector{0}).real() ==
          doctest::Approx(0.5));
    CHECK(remove_one_general(BeamState::vacuum(3)).state.empty());
}

TEST_CASE("iterated removal") {
    BeamState rho = diag(OccupationVector{2, 0}, 1.0);
    RemovalResult twice = remove_k(rho, 2);
    CHECK(twice.removed == 2);
    CHECK(twice.trace_retained == doctest::Approx(1.0));
    CHECK(twice.state.amplitude(OccupationVector{0, 0}, OccupationVector{0, 0}).real() ==
          doctest::Approx(1.0));
    CHECK(max_abs_difference(remove_k(rho, 0).state, rho) == 0.0);
    CHECK_THROWS_AS(remove_k(rho, -1), FockError);
}

TEST_CASE("fixed-N subset pipeline") {
    BeamState rho = diag(OccupationVector{1, 1}, 1.0);
    BeamState q1 = subset_of_fixed_N(rho, 2, 1);
    CHECK(q1.trace() == doctest::Approx(1.0));
    CHECK(q1.amplitude(OccupationVector{0, 1}, OccupationVector{0, 1}).real() ==
          doctest::Approx(0.5));
    CHECK(max_abs_difference(subset_of_fixed_N(rho, 2, 2), rho) == 0.0);
}

TEST_CASE("fixed-N removal rejects bad input") {
    BeamState mixed_sectors = diag(OccupationVector{1}, 0.5).plus(diag(OccupationVector{2}, 0.5));
    CHECK_THROWS_AS(remove_one_fixed_N(mixed_sectors, 2), FockError);
    CHECK_THROWS_AS(remove_one_fixed_N(BeamState(1), 1), FockError);
    CHECK_THROWS_AS(subset_of_fixed_N(diag(OccupationVector{2}, 1.0), 2, 3), FockError);
}
