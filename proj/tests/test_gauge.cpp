#include <doctest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "theta3/gauge.hpp"

using namespace theta3;
using fixtures::e8_graph;
using fixtures::e8_plus_h_graph;
using fixtures::sd;
using fixtures::single_vertex;

TEST_CASE("R invariant known values") {
    CHECK(r_invariant(sd({2, 11, 19})).value == -1);
    CHECK(r_invariant(sd({3, 5, 7})).value == 1);
    CHECK(r_invariant(sd({2, 3, 13})).value == -1);
    CHECK(r_invariant(sd({2, 11, 19})).residual < 1e-6);
}

TEST_CASE("R test fires exactly on nonnegative R") {
    CHECK(r_test(sd({3, 5, 7})));
    CHECK_FALSE(r_test(sd({2, 11, 19})));
    CHECK_FALSE(r_test(sd({2, 3, 13})));
}

TEST_CASE("R residual stays audited across the triple corpus") {
    // exhaustive with entries up to 60
    for (long long p = 2; p <= 58; ++p)
        for (long long q = p + 1; q <= 59; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (long long r = q + 1; r <= 60; ++r) {
                if (std::gcd(p, r) != 1 || std::gcd(q, r) != 1) continue;
                CHECK(r_invariant(sd({p, q, r})).residual < 1e-6);
            }
        }
    // seeded sample with entries up to 200
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long long> pick(2, 200);
    int done = 0;
    while (done < 60) {
        long long p = pick(rng), q = pick(rng), r = pick(rng);
        if (p >= q || q >= r) continue;
        if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1) continue;
        RValue v = r_invariant(sd({p, q, r}));
        CHECK(v.residual < 1e-6);
        ++done;
    }
}

TEST_CASE("rounding tolerance is enforced") {
    CHECK_THROWS_AS(r_invariant(sd({2, 11, 19}), 1e-18), Error);
    try {
        r_invariant(sd({2, 11, 19}), 1e-18);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RoundingUnstable);
    }
}

TEST_CASE("Milnor fiber signature by lattice count") {
    CHECK(milnor_fiber_signature(2, 3, 5) == -8);
    // forced by lambda(sigma(2,3,11)) = 2 and sign M = -8 lambda
    CHECK(milnor_fiber_signature(2, 3, 11) == -16);
    CHECK(milnor_fiber_signature(1, 2, 3) == 0);
    CHECK_THROWS_AS(milnor_fiber_signature(2, 4, 5), Error);
    CHECK_THROWS_AS(milnor_fiber_signature(0, 3, 5), Error);
}

TEST_CASE("Casson invariant from the lattice count") {
    CassonValue c1 = casson_brieskorn(2, 3, 11);
    CHECK(c1.lambda == 2);
    CHECK(c1.milnor_rank == 20);
    CassonValue c2 = casson_brieskorn(2, 3, 5);
    CHECK(c2.lambda == 1);
    CHECK(c2.milnor_rank == 8);
    CassonValue c3 = casson_brieskorn(1, 2, 3);
    CHECK(c3.lambda == 0);
    CHECK(c3.milnor_rank == 0);
}

TEST_CASE("Casson bound test") {
    CassonBoundTest t1 = casson_bound_test(2, 3, 11);
    CHECK(t1.lambda == 2);
    CHECK(t1.bound == Rat(5, 3));
    CHECK(t1.violated);

    CassonBoundTest t2 = casson_bound_test(2, 3, 13);
    CHECK_FALSE(t2.violated);  // bounds a contractible manifold; lambda = bound = 2
    CHECK(t2.lambda == 2);
    CHECK(t2.bound == Rat(2));

    CHECK_FALSE(casson_bound_test(1, 2, 3).violated);

    // the closed-form family violates the bound at (2,3) but not at (3,4)
    CHECK(casson_bound_test(2, 3, 2 * 6 - 1).violated);
    CHECK_FALSE(casson_bound_test(3, 4, 2 * 12 - 1).violated);
}

TEST_CASE("canonical class solves the adjunction system") {
    std::vector<Int> k8 = canonical_class(e8_graph());
    for (const Int& x : k8) CHECK(x == 0);

    // the unique solution of -K = -(-1) - 2 = -1
    std::vector<Int> k1 = canonical_class(single_vertex(-1));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == 1);
    CHECK(quadratic_form(build_intersection_matrix(single_vertex(-1)), k1) == -1);

    PlumbingGraph g = canonical_plumbing(sd({2, 3, 7}));
    IntersectionMatrix m = build_intersection_matrix(g);
    std::vector<Int> k = canonical_class(g);
    for (std::size_t i = 0; i < m.size(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < m.size(); ++j) acc += m(i, j) * k[j];
        CHECK(acc == -m(i, i) - 2);
    }
    // K reduces mod 2 to the Wu class (both characteristic, Wu unique)
    WuClass w = wu_class(g);
    for (std::size_t i = 0; i < k.size(); ++i)
        CHECK(mod_floor(k[i], 2) == w.coords[i]);

    CHECK_THROWS_AS(canonical_class(single_vertex(-2)), Error);
}

TEST_CASE("sign - K.K on the named examples") {
    CHECK(sign_minus_KK(e8_graph()) == -8);
    CHECK(sign_minus_KK(canonical_plumbing(sd({2, 3, 11}))) == -8);
    CHECK(sign_minus_KK(canonical_plumbing(sd({2, 3, 5}))) == -8);
}

TEST_CASE("two-sided canonical class identity on small triples") {
    for (long long p = 2; p <= 5; ++p)
        for (long long q = p + 1; q <= 9; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (long long r = q + 1; p * q * r <= 600; ++r) {
                if (std::gcd(p, r) != 1 || std::gcd(q, r) != 1) continue;
                Int lhs = sign_minus_KK(canonical_plumbing(sd({p, q, r})));
                Int lambda = casson_brieskorn(p, q, r).lambda;
                Int rhs = -24 * lambda + 2 * (p - 1) * (q - 1) * (r - 1);
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("10/8 admissibility") {
    CHECK_FALSE(ten_eighths_check(20, 16));  // 2E8 + 2H is prohibited
    CHECK_FALSE(ten_eighths_check(10, 8));   // a single E8 + H is already extremal
    CHECK(ten_eighths_check(12, 8));
    CHECK(ten_eighths_check(4, 0));  // vacuous
    CHECK_THROWS_AS(ten_eighths_check(0, 8), std::invalid_argument);
}

TEST_CASE("even indefinite unimodular forms classify by rank and signature") {
    EvenFormClass c = even_form_classify(build_intersection_matrix(e8_plus_h_graph(1, 1)));
    CHECK(c.e8_count == 1);
    CHECK(c.h_count == 1);

    for (int q : {3, 7, 11}) {
        int copies = (q + 1) / 4;
        EvenFormClass cq =
            even_form_classify(build_intersection_matrix(e8_plus_h_graph(copies, 1)));
        CHECK(cq.e8_count == copies);
        CHECK(cq.h_count == 1);
        // round-trip: rank = 8|e8| + 2h, sign = 8 e8
        FormSummary fs = signature(build_intersection_matrix(e8_plus_h_graph(copies, 1)));
        CHECK(Int(fs.rank) == 8 * abs_int(cq.e8_count) + 2 * cq.h_count);
        CHECK(fs.signature() == 8 * cq.e8_count);
    }

    EvenFormClass h = even_form_classify(build_intersection_matrix(fixtures::hyperbolic_graph()));
    CHECK(h.e8_count == 0);
    CHECK(h.h_count == 1);

    // negative-definite E8 graph: sign of the definite part flips
    PlumbingGraph neg = fixtures::e8_plus_h_graph(1, 1, -2);
    EvenFormClass cn = even_form_classify(build_intersection_matrix(neg));
    CHECK(cn.e8_count == -1);
    CHECK(cn.h_count == 1);
}

namespace {

Errc classify_error(const IntersectionMatrix& m) {
    try {
        even_form_classify(m);
    } catch (const Error& e) {
        return e.code();
    }
    throw std::logic_error("expected even_form_classify to throw");
}

}  // namespace

TEST_CASE("even form classification error paths") {
    CHECK(classify_error(build_intersection_matrix(single_vertex(1))) == Errc::NotEven);
    CHECK(classify_error(build_intersection_matrix(e8_graph())) == Errc::Definite);
    IntersectionMatrix scaled(2);
    scaled.set(0, 1, 2);
    CHECK(classify_error(scaled) == Errc::NotUnimodular);
}

TEST_CASE("odd torus-surgery family membership") {
    auto m = odd_torus_surgery_member(sd({2, 3, 7}));
    REQUIRE(m.has_value());
    CHECK(m->p == 2);
    CHECK(m->q == 3);
    CHECK(m->k == 1);
    CHECK_FALSE(odd_torus_surgery_member(sd({2, 3, 13})).has_value());  // k = 2 even
    CHECK_FALSE(odd_torus_surgery_member(sd({2, 3, 25})).has_value());  // k = 4 even
    CHECK_FALSE(odd_torus_surgery_member(sd({3, 5, 7})).has_value());
    CHECK_FALSE(odd_torus_surgery_member(sd({2, 3, 5, 7})).has_value());
    auto big = odd_torus_surgery_member(sd({2, 5, 31}));  // 2*5*3 + 1
    REQUIRE(big.has_value());
    CHECK(big->k == 3);
}

namespace {

const Verdict& verdict_named(const ObstructionReport& r, const std::string& name) {
    for (const Verdict& v : r.verdicts)
        if (v.criterion == name) return v;
    throw std::logic_error("missing verdict " + name);
}

}  // namespace

TEST_CASE("obstruction reports aggregate the criteria") {
    ObstructionReport r1 = obstruction_report(sd({2, 11, 19}));
    CHECK(r1.mubar == -1);
    CHECK(r1.r.value == -1);
    CHECK(verdict_named(r1, "mubar-negative").outcome == Verdict::Outcome::fires);
    CHECK(verdict_named(r1, "r-nonnegative").outcome == Verdict::Outcome::silent);

    ObstructionReport r2 = obstruction_report(sd({3, 5, 7}));
    CHECK(r2.mubar == 0);
    CHECK(verdict_named(r2, "mubar-negative").outcome == Verdict::Outcome::silent);
    CHECK(verdict_named(r2, "r-nonnegative").outcome == Verdict::Outcome::fires);

    ObstructionReport r3 = obstruction_report(sd({2, 3, 11}));
    CHECK(r3.mubar == 0);
    REQUIRE(r3.casson.has_value());
    CHECK(r3.casson->lambda == 2);
    CHECK(verdict_named(r3, "casson-bound").outcome == Verdict::Outcome::fires);
    CHECK(verdict_named(r3, "mubar-negative").outcome == Verdict::Outcome::silent);

    ObstructionReport r4 = obstruction_report(sd({2, 3, 7}));
    CHECK(verdict_named(r4, "torus-surgery-family").outcome == Verdict::Outcome::fires);
    CHECK(verdict_named(r4, "spin-ten-eighths").outcome == Verdict::Outcome::fires);

    ObstructionReport r5 = obstruction_report(sd({2, 3, 5, 7}));
    CHECK(verdict_named(r5, "casson-bound").outcome == Verdict::Outcome::not_applicable);
    CHECK_FALSE(r5.casson.has_value());
}
