#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "theta3/plumbing.hpp"

using namespace theta3;
using fixtures::chain;
using fixtures::e8_graph;
using fixtures::single_vertex;

TEST_CASE("intersection matrix follows the three-case entry rule") {
    PlumbingGraph g;
    g.add_vertex("a", -2);
    IntersectionMatrix m1 = build_intersection_matrix(g);
    CHECK(m1.size() == 1);
    CHECK(m1(0, 0) == -2);

    PlumbingGraph g2 = chain({-2, -3});
    IntersectionMatrix m2 = build_intersection_matrix(g2);
    CHECK(m2(0, 0) == -2);
    CHECK(m2(1, 1) == -3);
    CHECK(m2(0, 1) == 1);
    CHECK(m2(1, 0) == 1);

    IntersectionMatrix m8 = build_intersection_matrix(e8_graph());
    CHECK(m8.is_symmetric());
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(m8(i, i) == -2);
        for (std::size_t j = i + 1; j < 8; ++j) CHECK((m8(i, j) == 0 || m8(i, j) == 1));
    }
    CHECK(determinant(m8) == 1);
    FormSummary fs = signature(m8);
    CHECK(fs.n_plus == 0);
    CHECK(fs.n_minus == 8);
    CHECK(fs.n_zero == 0);
}

TEST_CASE("graph invariants are enforced at construction") {
    PlumbingGraph g;
    g.add_vertex("a", -1);
    g.add_vertex("b", -2);
    g.add_vertex("c", -3);
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    CHECK_THROWS_AS(g.add_edge("a", "a"), Error);   // self-loop
    CHECK_THROWS_AS(g.add_edge("a", "b"), Error);   // duplicate edge
    CHECK_THROWS_AS(g.add_edge("c", "a"), Error);   // cycle
    CHECK_THROWS_AS(g.add_vertex("a", 0), Error);   // duplicate id
}

TEST_CASE("determinant on the named examples") {
    CHECK(determinant(build_intersection_matrix(chain({-2, -3}))) == 5);
    CHECK(determinant(IntersectionMatrix(0)) == 1);
    CHECK(oracles::cofactor_determinant(build_intersection_matrix(e8_graph())) == 1);
}

TEST_CASE("signature on the named examples") {
    IntersectionMatrix hyp(2);
    hyp.set(0, 1, 1);
    FormSummary f1 = signature(hyp);
    CHECK(f1.n_plus == 1);
    CHECK(f1.n_minus == 1);
    CHECK(f1.n_zero == 0);
    CHECK(f1.parity == Parity::even);

    IntersectionMatrix d(2);
    d.set(0, 0, 1);
    d.set(1, 1, -1);
    FormSummary f2 = signature(d);
    CHECK(f2.n_plus == 1);
    CHECK(f2.n_minus == 1);
    CHECK(f2.parity == Parity::odd);
}

namespace {

void check_against_oracles(const IntersectionMatrix& m) {
    CAPTURE(m.size());
    CHECK(determinant(m) == oracles::cofactor_determinant(m));
    FormSummary fs = signature(m);
    oracles::Inertia in = oracles::charpoly_inertia(m);
    CHECK(fs.n_plus == in.n_plus);
    CHECK(fs.n_minus == in.n_minus);
    CHECK(fs.n_zero == in.n_zero);
    CHECK(fs.n_plus + fs.n_minus + fs.n_zero == fs.rank);
}

}  // namespace

TEST_CASE("determinant and inertia agree with brute-force oracles") {
    // exhaustive 2x2 over [-3,3]
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c) {
                IntersectionMatrix m(2);
                m.set(0, 0, a);
                m.set(1, 1, b);
                m.set(0, 1, c);
                check_against_oracles(m);
            }
    // exhaustive 3x3 over [-2,2]
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d)
                    for (int e = -2; e <= 2; ++e)
                        for (int f = -2; f <= 2; ++f) {
                            IntersectionMatrix m(3);
                            m.set(0, 0, a);
                            m.set(1, 1, b);
                            m.set(2, 2, c);
                            m.set(0, 1, d);
                            m.set(0, 2, e);
                            m.set(1, 2, f);
                            check_against_oracles(m);
                        }
    // seeded random sizes 4..6 over [-3,3]
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 4 + trial % 3;
        IntersectionMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m.set(i, j, entry(rng));
        check_against_oracles(m);
    }
}

TEST_CASE("homology sphere detection") {
    CHECK(is_homology_sphere(e8_graph()));
    CHECK_FALSE(is_homology_sphere(single_vertex(-2)));
    CHECK(is_homology_sphere(single_vertex(1)));
    CHECK(is_homology_sphere(fixtures::hyperbolic_graph()));
}

TEST_CASE("unimodular forests have zero kernel") {
    const PlumbingGraph graphs[] = {e8_graph(), single_vertex(1), fixtures::hyperbolic_graph()};
    for (const PlumbingGraph& g : graphs) {
        FormSummary fs = signature(build_intersection_matrix(g));
        CHECK(abs_int(fs.determinant) == 1);
        CHECK(fs.n_zero == 0);
    }
    // a forest with an isolated 0-weight vertex has exactly that kernel
    PlumbingGraph z;
    z.add_vertex("a", 0);
    z.add_vertex("b", -2);
    FormSummary fz = signature(build_intersection_matrix(z));
    CHECK(fz.n_zero == 1);
    CHECK(fz.determinant == 0);
}

TEST_CASE("blow-ups preserve |det| and add one negative eigenvalue") {
    SUBCASE("leaf of the E8 graph") {
        PlumbingGraph g = e8_graph();
        PlumbingGraph b = graph_blowup(g, BlowupSite::at_vertex("n7"));
        CHECK(b.size() == 9);
        CHECK(abs_int(determinant(build_intersection_matrix(b))) == 1);
        FormSummary fs = signature(build_intersection_matrix(b));
        CHECK(fs.n_minus == 9);
    }
    SUBCASE("single (-1) vertex") {
        PlumbingGraph b = graph_blowup(single_vertex(-1), BlowupSite::at_vertex("a"));
        CHECK(b.size() == 2);
        CHECK(b.vertices()[0].weight == -2);
        CHECK(b.vertices()[1].weight == -1);
        CHECK(b.has_edge(0, 1));
        CHECK(abs_int(determinant(build_intersection_matrix(b))) == 1);
    }
    SUBCASE("edge subdivision") {
        PlumbingGraph g = chain({-2, -3});
        PlumbingGraph b = graph_blowup(g, BlowupSite::on_edge("v0", "v1"));
        CHECK(b.size() == 3);
        CHECK(b.vertices()[0].weight == -3);
        CHECK(b.vertices()[1].weight == -4);
        CHECK(b.vertices()[2].weight == -1);
        CHECK_FALSE(b.has_edge(0, 1));
        CHECK(abs_int(determinant(build_intersection_matrix(b))) == 5);
        FormSummary before = signature(build_intersection_matrix(g));
        FormSummary after = signature(build_intersection_matrix(b));
        CHECK(after.n_minus == before.n_minus + 1);
        CHECK(after.n_plus == before.n_plus);
    }
    SUBCASE("invalid sites") {
        PlumbingGraph g = chain({-2, -3});
        CHECK_THROWS_AS(graph_blowup(g, BlowupSite::at_vertex("zz")), Error);
        PlumbingGraph h;
        h.add_vertex("a", -1);
        h.add_vertex("b", -1);
        CHECK_THROWS_AS(graph_blowup(h, BlowupSite::on_edge("a", "b")), Error);
    }
}

TEST_CASE("solve_symmetric returns the exact rational solution") {
    IntersectionMatrix m = build_intersection_matrix(chain({-2, -3}));
    std::vector<Int> rhs = {Int(1), Int(0)};
    std::vector<Rat> x = solve_symmetric(m, rhs);
    // [[-2,1],[1,-3]] x = (1,0) -> x = (-3/5, -1/5)
    CHECK(x[0] == Rat(-3, 5));
    CHECK(x[1] == Rat(-1, 5));
    IntersectionMatrix sing(1);
    sing.set(0, 0, 0);
    CHECK_THROWS_AS(solve_symmetric(sing, {Int(1)}), Error);
}
