#include <doctest.h>

#include "fixtures.hpp"
#include "theta3/floer.hpp"
#include "theta3/gauge.hpp"
#include "theta3/wu.hpp"

using namespace theta3;

namespace {

FloerRanks rv(std::initializer_list<long long> xs) {
    FloerRanks f;
    int i = 0;
    for (long long x : xs) f.ranks[i++] = x;
    return f;
}

}  // namespace

TEST_CASE("Casson from ranks is half the Euler characteristic") {
    CHECK(casson_from_ranks(rv({1, 0, 1, 0, 1, 0, 1, 0})) == Rat(2));
    CHECK(casson_from_ranks(rv({0, 0, 0, 0, 0, 0, 0, 0})) == Rat(0));
    CHECK(casson_from_ranks(torus_knot_surgery_ranks(2, 3, 1)) == Rat(2));
    CHECK(casson_from_ranks(rv({1, 0, 0, 0, 0, 0, 0, 0})) == Rat(1, 2));
}

TEST_CASE("nu sign pattern is (-,-,+,+,-,-,+,+)") {
    CHECK(nu_from_ranks(rv({2, 0, 0, 0, 0, 0, 0, 0})).value == Rat(-1));
    CHECK(nu_from_ranks(rv({0, 0, 1, 0, 0, 0, 1, 0})).value == Rat(1));
    CHECK(nu_from_ranks(rv({0, 1, 0, 0, 0, 0, 0, 0})).value == Rat(-1, 2));
    CHECK(nu_from_ranks(rv({0, 0, 0, 1, 0, 0, 0, 1})).value == Rat(1));
    // any 2-periodic vector cancels in pairs
    CHECK(nu_from_ranks(rv({3, 1, 3, 1, 3, 1, 3, 1})).numerator == 0);
}

TEST_CASE("nu vanishes on every 2-periodic vector with entries up to 3") {
    for (int r0 = 0; r0 <= 3; ++r0)
        for (int r1 = 0; r1 <= 3; ++r1) {
            FloerRanks f = rv({r0, r1, r0, r1, r0, r1, r0, r1});
            REQUIRE(is_two_periodic(f));
            CHECK(nu_from_ranks(f).numerator == 0);
        }
}

TEST_CASE("periodicity predicates") {
    CHECK(is_two_periodic(rv({1, 0, 1, 0, 1, 0, 1, 0})));
    FloerRanks f = rv({1, 0, 2, 0, 1, 0, 2, 0});
    CHECK_FALSE(is_two_periodic(f));
    CHECK(is_four_periodic(f));
    CHECK(is_two_periodic(rv({0, 0, 0, 0, 0, 0, 0, 0})));
    CHECK(is_four_periodic(rv({0, 0, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("braid Mazur rank generators") {
    CHECK(braid_mazur_ranks(GradingParity::even) == rv({1, 0, 1, 0, 1, 0, 1, 0}));
    CHECK(braid_mazur_ranks(GradingParity::odd) == rv({0, 1, 0, 1, 0, 1, 0, 1}));
    CHECK(nu_from_ranks(braid_mazur_ranks(GradingParity::even)).numerator == 0);
    CHECK(nu_from_ranks(braid_mazur_ranks(GradingParity::odd)).numerator == 0);
}

TEST_CASE("Casson-Harer family rank generators") {
    CHECK(casson_harer_ranks(3, 1, +1) == rv({1, 0, 1, 0, 1, 0, 1, 0}));
    CHECK(casson_harer_ranks(3, 1, -1) == rv({0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(casson_harer_ranks(5, 1, +1) == rv({4, 0, 4, 0, 4, 0, 4, 0}));
    CHECK_THROWS_AS(casson_harer_ranks(4, 1, +1), Error);  // p must be odd
    CHECK_THROWS_AS(casson_harer_ranks(3, 0, +1), Error);
    CHECK_THROWS_AS(casson_harer_ranks(3, 1, 2), std::invalid_argument);
}

TEST_CASE("torus-knot surgery rank generators") {
    CHECK(torus_knot_surgery_ranks(2, 3, 1) == rv({1, 0, 1, 0, 1, 0, 1, 0}));
    CHECK(torus_knot_surgery_ranks(2, 5, 1) == rv({3, 0, 3, 0, 3, 0, 3, 0}));
    CHECK(nu_from_ranks(torus_knot_surgery_ranks(3, 4, 2)).numerator == 0);
    CHECK_THROWS_AS(torus_knot_surgery_ranks(2, 4, 1), Error);
    CHECK_THROWS_AS(torus_knot_surgery_ranks(2, 3, 0), Error);
}

TEST_CASE("generator Euler characteristics match the closed forms") {
    for (long long p : {3, 5, 7}) {
        CHECK(casson_from_ranks(casson_harer_ranks(p, 1, +1)) ==
              Rat((p * p - 1) * (p + 3), 24));
        // magnitude agrees with the lattice-count Casson invariant
        Rat ranks_side = casson_from_ranks(casson_harer_ranks(p, 1, +1));
        Int lattice_side = casson_brieskorn(p, p + 1, p + 2).lambda;
        CHECK(abs(numerator(ranks_side)) == abs_int(lattice_side));
        CHECK(denominator(ranks_side) == 1);
    }
    CHECK(casson_from_ranks(torus_knot_surgery_ranks(2, 3, 2)) == Rat(4));
    CHECK(casson_brieskorn(2, 3, 2 * 2 * 6 - 1).lambda == 4);
}

TEST_CASE("nu mod 2 against the Rochlin invariant") {
    // sigma(3,4,5) is in the bounding list: mubar = 0 and nu = 0
    FloerRanks f345 = casson_harer_ranks(3, 1, +1);
    int mu = rochlin(canonical_plumbing(fixtures::sd({3, 4, 5})));
    CHECK(mu == 0);
    CHECK(nu_mod2_matches_rochlin(f345, mu));
    CHECK(nu_mod2_matches_rochlin(rv({0, 0, 1, 0, 0, 0, 1, 0}), 1));
    CHECK_FALSE(nu_mod2_matches_rochlin(rv({0, 0, 1, 0, 0, 0, 1, 0}), 0));
    CHECK_THROWS_AS(nu_mod2_matches_rochlin(rv({1, 0, 0, 0, 0, 0, 0, 0}), 0), Error);
}

TEST_CASE("grading reversal negates nu and the Euler characteristic") {
    for (std::size_t code = 0; code < (std::size_t(1) << 8); ++code) {
        FloerRanks f;
        for (int n = 0; n < 8; ++n) f.ranks[n] = (code >> n) & 1;
        FloerRanks r = grading_reversal(f);
        CHECK(nu_from_ranks(r).numerator == -nu_from_ranks(f).numerator);
        CHECK(casson_from_ranks(r) == -casson_from_ranks(f));
    }
    // involution
    FloerRanks f = rv({1, 2, 3, 4, 5, 6, 7, 0});
    CHECK(grading_reversal(grading_reversal(f)) == f);
}
