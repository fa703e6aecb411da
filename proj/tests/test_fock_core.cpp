#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fock/beam_state.hpp"
#include "fock/combinatorics.hpp"
#include "fock/errors.hpp"
#include "fock/state_io.hpp"

using namespace fock;

TEST_CASE("occupation vector basics") {
    OccupationVector n{2, 0, 1};
    CHECK(n.modes() == 3);
    CHECK(n.total() == 3);
    CHECK(n[0] == 2);
    CHECK(n.str() == "2,0,1");
    CHECK(n.dominates(OccupationVector{1, 0, 1}));
    CHECK_FALSE(n.dominates(OccupationVector{0, 1, 0}));
    CHECK(n.shifted(1, 2) == OccupationVector{2, 2, 1});
    CHECK(n.minus(OccupationVector{1, 0, 0}) == OccupationVector{1, 0, 1});
    CHECK(OccupationVector::unit(3, 2) == OccupationVector{0, 0, 1});
}

TEST_CASE("sector enumeration is complete and ordered") {
    for (int d = 1; d <= 4; ++d)
        for (int N = 0; N <= 5; ++N) {
            auto basis = enumerate_occupations(d, N);
            CHECK(BigInt(basis.size()) == binomial(N + d - 1, d - 1));
            for (std::size_t i = 0; i < basis.size(); ++i) {
                CHECK(basis[i].total() == N);
                if (i > 0) CHECK(basis[i - 1] < basis[i]);
            }
        }
}

TEST_CASE("occupation parsing") {
    CHECK(parse_occupations("2,0,1") == OccupationVector{2, 0, 1});
    CHECK(parse_occupations(" 1 , 3 ") == OccupationVector{1, 3});
    CHECK_THROWS_AS(parse_occupations("1,-2"), FockError);
    CHECK_THROWS_AS(parse_occupations("1,x"), FockError);
    CHECK_THROWS_AS(parse_occupations(""), FockError);
}

TEST_CASE("photon cap enforced at construction") {
    CHECK_THROWS_AS(BeamState::ket_bra(OccupationVector{65}, OccupationVector{65}), FockError);
    CHECK_NOTHROW(BeamState::ket_bra(OccupationVector{64}, OccupationVector{64}));
}

TEST_CASE("pure state factory normalizes") {
    // (|2,0> + |0,2>) / sqrt(2), handed in unnormalized
    BeamState noon = BeamState::pure(
        2, {{OccupationVector{2, 0}, {3.0, 0.0}}, {OccupationVector{0, 2}, {3.0, 0.0}}});
    CHECK(noon.trace() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(noon.amplitude(OccupationVector{2, 0}, OccupationVector{0, 2}).real() ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(noon.max_photons() == 2);
    CHECK(noon.term_count() == 4);
    CHECK(noon.is_hermitian());
    CHECK(noon.is_normalized());
}

TEST_CASE("hermitian error detects one-sided terms") {
    BeamState raw = BeamState::ket_bra(OccupationVector{1}, OccupationVector{0});
    CHECK(raw.hermitian_error() == doctest::Approx(1.0));
    BeamState fixed = raw.plus(BeamState::ket_bra(OccupationVector{0}, OccupationVector{1}));
    CHECK(fixed.hermitian_error() == doctest::Approx(0.0));
}

TEST_CASE("amplitudes below the prune threshold vanish") {
    StateBuilder builder(1);
    builder.add(OccupationVector{0}, OccupationVector{0}, Complex(1.0, 0.0));
    builder.add(OccupationVector{1}, OccupationVector{1}, Complex(1e-16, 0.0));
    BeamState state = builder.build();
    CHECK(state.term_count() == 1);
    CHECK(state.max_photons() == 0);
}

TEST_CASE("annihilation ladder factors") {
    BeamState rho = BeamState::ket_bra(OccupationVector{2, 0}, OccupationVector{2, 0});
    BeamState left = apply_annihilation(rho, 0, Side::Ket);
    CHECK(left.amplitude(OccupationVector{1, 0}, OccupationVector{2, 0}) ==
          Complex(std::sqrt(2.0), 0.0));
    BeamState both = apply_annihilation(rho, 0, Side::Both);
    CHECK(both.amplitude(OccupationVector{1, 0}, OccupationVector{1, 0}).real() ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK(apply_annihilation(rho, 1, Side::Both).empty());
    CHECK_THROWS_AS(apply_annihilation(rho, 2, Side::Ket), FockError);
}

TEST_CASE("sector decomposition splits diagonal blocks from coherences") {
    // 0.25 vacuum + 0.75 |1>, plus cross coherence 0.2 |1><0| + h.c.
    StateBuilder builder(1);
    builder.add(OccupationVector{0}, OccupationVector{0}, Complex(0.25, 0.0));
    builder.add(OccupationVector{1}, OccupationVector{1}, Complex(0.75, 0.0));
    builder.add(OccupationVector{1}, OccupationVector{0}, Complex(0.2, 0.0));
    builder.add(OccupationVector{0}, OccupationVector{1}, Complex(0.2, 0.0));
    BeamState rho = builder.build();

    SectorDecomposition decomp = sector_decompose(rho);
    REQUIRE(decomp.sectors.size() == 2);
    CHECK(decomp.sectors.at(0).probability == doctest::Approx(0.25));
    CHECK(decomp.sectors.at(1).probability == doctest::Approx(0.75));
    CHECK(decomp.sectors.at(1).state.trace() == doctest::Approx(1.0));
    CHECK(decomp.cross_terms.term_count() == 2);
    CHECK(max_abs_difference(decomp.reassemble(), rho) < 1e-15);
}

TEST_CASE("sector decomposition rejects non-hermitian input") {
    BeamState raw = BeamState::ket_bra(OccupationVector{1}, OccupationVector{1}, {0.0, 0.5});
    CHECK_THROWS_AS(sector_decompose(raw), FockError);
}

TEST_CASE("state document round trip is byte identical") {
    BeamState noon = BeamState::pure(
        2, {{OccupationVector{2, 0}, {1.0, 0.0}}, {OccupationVector{0, 2}, {0.0, 1.0}}});
    std::string doc = state_to_json(noon);
    BeamState back = parse_state(doc);
    CHECK(max_abs_difference(noon, back) == 0.0);
    CHECK(state_to_json(back) == doc);
}

TEST_CASE("parser accepts omitted imaginary parts and sums duplicates") {
    BeamState state = parse_state(R"({"modes": 1, "terms": [
        {"ket": [1], "bra": [1], "re": 0.25},
        {"ket": [1], "bra": [1], "re": 0.5, "im": 0.0},
        {"ket": [0], "bra": [0], "re": 0.25, "extra": "ignored"}]})");
    CHECK(state.amplitude(OccupationVector{1}, OccupationVector{1}) == Complex(0.75, 0.0));
    CHECK(state.trace() == doctest::Approx(1.0));
}

TEST_CASE("parser rejects malformed documents") {
    CHECK_THROWS_AS(parse_state("{\"modes\": 1"), FockError);
    CHECK_THROWS_AS(parse_state("{\"modes\": 1, \"terms\": []} trailing"), FockError);
    CHECK_THROWS_AS(parse_state(R"({"terms": []})"), FockError);
    CHECK_THROWS_AS(
        parse_state(R"({"modes": 2, "terms": [{"ket": [1], "bra": [1, 0], "re": 1.0}]})"),
        FockError);
    CHECK_THROWS_AS(
        parse_state(R"({"modes": 1, "terms": [{"ket": [-1], "bra": [1], "re": 1.0}]})"),
        FockError);
}

TEST_CASE("checked parse enforces hermiticity") {
    std::string doc = R"({"modes": 1, "terms": [{"ket": [1], "bra": [0], "re": 1.0}]})";
    CHECK_NOTHROW(parse_state(doc));
    CHECK_THROWS_AS(parse_checked(doc), FockError);
}

TEST_CASE("serialization order is bra-major") {
    StateBuilder builder(2);
    builder.add(OccupationVector{0, 1}, OccupationVector{1, 0}, Complex(0.5, 0.0));
    builder.add(OccupationVector{1, 0}, OccupationVector{0, 1}, Complex(0.5, 0.0));
    builder.add(OccupationVector{1, 0}, OccupationVector{1, 0}, Complex(0.5, 0.0));
    std::string doc = state_to_json(builder.build());
    auto first = doc.find("\"bra\": [0,1]");
    auto second = doc.find("\"bra\": [1,0]");
    REQUIRE(first != std::string::npos);
    REQUIRE(second != std::string::npos);
    CHECK(first < second);
}

TEST_CASE("matrix document parsing") {
    auto m = parse_matrix(R"({"re": [[0, 1], [1, 0]], "im": [[0, 0.5], [-0.5, 0]]})");
    REQUIRE(m.size() == 2);
    CHECK(m[0][1] == Complex(1.0, 0.5));
    CHECK(m[1][0] == Complex(1.0, -0.5));
    auto real_only = parse_matrix(R"({"re": [[2]]})");
    CHECK(real_only[0][0] == Complex(2.0, 0.0));
    CHECK_THROWS_AS(parse_matrix(R"({"re": [[0, 1]]})"), FockError);
}

TEST_CASE("seventeen digit formatting survives a round trip") {
    double x = 1.0 / 3.0;
    CHECK(std::stod(format_double(x)) == x);
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-0.0) == "-0");
}
