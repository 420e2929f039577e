#include "theta3/checks.hpp"

#include <functional>
#include <numeric>
#include <random>

#include "theta3/gauge.hpp"
#include "theta3/floer.hpp"
#include "theta3/seifert.hpp"
#include "theta3/wu.hpp"

namespace theta3 {

namespace {

void expect(CheckOutcome& o, bool cond, const std::string& what) {
    if (cond) {
        ++o.passed;
    } else {
        ++o.failed;
        o.failures.push_back(what);
    }
}

SeifertData sd(std::initializer_list<long long> xs) {
    std::vector<Int> v;
    for (long long x : xs) v.emplace_back(x);
    return SeifertData(std::move(v));
}

std::vector<std::vector<Int>> coprime_triples_up_to_product(long long bound) {
    std::vector<std::vector<Int>> out;
    for (long long p = 2; p * (p + 1) * (p + 2) <= bound; ++p)
        for (long long q = p + 1; p * q * (q + 1) <= bound; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (long long r = q + 1; p * q * r <= bound; ++r) {
                if (std::gcd(p, r) != 1 || std::gcd(q, r) != 1) continue;
                out.push_back({Int(p), Int(q), Int(r)});
            }
        }
    return out;
}

// Positive-definite E8 plumbing (all weights +2) plus hyperbolic pairs:
// an even unimodular indefinite graph with signature 8 * copies.
PlumbingGraph e8_plus_h_graph(int e8_copies, int h_copies) {
    PlumbingGraph g;
    for (int c = 0; c < e8_copies; ++c) {
        std::string p = "e" + std::to_string(c) + "_";
        for (int i = 0; i < 8; ++i) g.add_vertex(p + std::to_string(i), 2);
        // T(2,3,5) tree: center with arms of lengths 1, 2, 4
        g.add_edge(p + "0", p + "1");
        g.add_edge(p + "0", p + "2");
        g.add_edge(p + "2", p + "3");
        g.add_edge(p + "0", p + "4");
        g.add_edge(p + "4", p + "5");
        g.add_edge(p + "5", p + "6");
        g.add_edge(p + "6", p + "7");
    }
    for (int c = 0; c < h_copies; ++c) {
        std::string p = "h" + std::to_string(c) + "_";
        g.add_vertex(p + "0", 0);
        g.add_vertex(p + "1", 0);
        g.add_edge(p + "0", p + "1");
    }
    return g;
}

// Small homology-sphere corpus shared by the uniqueness and blow-up suites.
std::vector<PlumbingGraph> small_corpus() {
    std::vector<PlumbingGraph> out;
    const std::vector<std::vector<long long>> seiferts = {
        {2, 3, 5}, {2, 3, 7}, {2, 3, 11}, {3, 4, 5}, {2, 5, 7}};
    for (const auto& fibers : seiferts) {
        std::vector<Int> v(fibers.begin(), fibers.end());
        out.push_back(canonical_plumbing(SeifertData(std::move(v))));
    }
    PlumbingGraph one;
    one.add_vertex("a", 1);
    out.push_back(one);
    PlumbingGraph minus_one;
    minus_one.add_vertex("a", -1);
    out.push_back(minus_one);
    PlumbingGraph hyp;
    hyp.add_vertex("a", 0);
    hyp.add_vertex("b", 0);
    hyp.add_edge("a", "b");
    out.push_back(hyp);
    out.push_back(e8_plus_h_graph(1, 1));
    return out;
}

void suite_mubar_known_values(CheckOutcome& o, double) {
    const std::pair<SeifertData, long long> cases[] = {
        {sd({2, 3, 7}), 1},  {sd({4, 7, 9}), -2},  {sd({2, 3, 25}), 0},
        {sd({2, 11, 19}), -1}, {sd({3, 5, 7}), 0}, {sd({2, 3, 5}), -1},
    };
    for (const auto& [s, want] : cases)
        expect(o, mubar_seifert(s) == want,
               "mubar " + s.label() + " != " + std::to_string(want));
}

void suite_r_known_values(CheckOutcome& o, double tol) {
    expect(o, r_invariant(sd({2, 11, 19}), tol).value == -1, "R(2,11,19) != -1");
    expect(o, r_invariant(sd({3, 5, 7}), tol).value == 1, "R(3,5,7) != 1");
    expect(o, r_test(sd({3, 5, 7}), tol), "R-test silent on sigma(3,5,7)");
    expect(o, !r_test(sd({2, 11, 19}), tol), "R-test fired on sigma(2,11,19)");
}

void suite_negativity_family(CheckOutcome& o, double) {
    for (long long p = 2; p <= 12; ++p)
        for (long long q = p + 1; q <= 12; ++q) {
            if (std::gcd(p, q) != 1) continue;
            SeifertData s = sd({p, q, p * q - 1});
            expect(o, mubar_seifert(s) < 0, "mubar " + s.label() + " not negative");
        }
}

void suite_additivity(CheckOutcome& o, double) {
    const std::vector<std::vector<long long>> quads = {
        {2, 3, 5, 7},  {2, 3, 5, 11}, {2, 3, 7, 11}, {2, 5, 7, 9},  {3, 4, 5, 7},
        {2, 3, 7, 13}, {2, 5, 7, 11}, {3, 5, 7, 8},  {2, 3, 11, 13}, {3, 4, 7, 11},
        {2, 7, 9, 11}, {5, 6, 7, 11},
    };
    for (const auto& q : quads) {
        SeifertData s = sd({q[0], q[1], q[2], q[3]});
        auto [left, right] = splice_decompose(s, 2);
        Int lhs = mubar_seifert(s);
        Int rhs = mubar_seifert(left) + mubar_seifert(right);
        expect(o, lhs == rhs,
               s.label() + ": " + lhs.str() + " != " + left.label() + " + " + right.label() +
                   " = " + rhs.str());
    }
}

void suite_surgery_vanishing(CheckOutcome& o, double) {
    // Iterating the surgery relation from a_n = 1 gives
    // mubar(sigma(base, 2ak+1)) = mubar(sigma(base)) and
    // mubar(sigma(base, 2ak-1)) = -mubar(sigma(base)), so the family
    // vanishes exactly when the base sphere has mubar 0.
    const std::vector<std::vector<long long>> zero_bases = {{2, 3}, {2, 5}, {3, 4}, {2, 3, 13}};
    for (const auto& base : zero_bases) {
        std::vector<Int> b(base.begin(), base.end());
        for (long long k = 1; k <= 5; ++k)
            for (int sign : {+1, -1}) {
                SeifertData s = surgery_family(b, Int(k), sign);
                expect(o, mubar_seifert(s) == 0, "mubar " + s.label() + " != 0");
            }
    }
    const std::vector<std::vector<long long>> general_bases = {{2, 3, 5}, {2, 3, 7}};
    for (const auto& base : general_bases) {
        std::vector<Int> b(base.begin(), base.end());
        Int base_mubar = mubar_seifert(SeifertData(b));
        for (long long k = 1; k <= 3; ++k) {
            SeifertData plus = surgery_family(b, Int(k), +1);
            SeifertData minus = surgery_family(b, Int(k), -1);
            expect(o, mubar_seifert(plus) == base_mubar,
                   "mubar " + plus.label() + " != mubar of the base");
            expect(o, mubar_seifert(minus) == -base_mubar,
                   "mubar " + minus.label() + " != -mubar of the base");
        }
    }
}

void suite_surgery_relation(CheckOutcome& o, double) {
    // mubar(sigma(a1,...,2a + a_n)) = +mubar(sigma(a1,...,a_n)); on the
    // 2a - a_n branch the observed sign is -1 throughout this corpus.
    const std::vector<std::vector<long long>> triples = {
        {2, 3, 5}, {2, 3, 7}, {2, 3, 11}, {2, 5, 7}, {3, 4, 5}, {2, 5, 9}, {3, 5, 7},
    };
    for (const auto& t : triples) {
        long long a = t[0] * t[1];
        SeifertData s = sd({t[0], t[1], t[2]});
        SeifertData plus = sd({t[0], t[1], 2 * a + t[2]});
        expect(o, mubar_seifert(plus) == mubar_seifert(s),
               "plus-branch relation failed for " + s.label());
        if (2 * a - t[2] >= 2) {
            SeifertData minus = sd({t[0], t[1], 2 * a - t[2]});
            expect(o, mubar_seifert(minus) == -mubar_seifert(s),
                   "minus-branch sign differs from -1 for " + s.label());
        }
    }
}

void suite_casson_closed_form(CheckOutcome& o, double) {
    const std::pair<long long, long long> pqs[] = {{2, 3}, {2, 5}, {3, 4}, {3, 5}};
    for (auto [p, q] : pqs)
        for (long long k = 1; k <= 3; ++k) {
            Int r = 2 * p * q * k - 1;
            CassonValue cv = casson_brieskorn(p, q, r);
            Int want = k * (p * p - 1) * (q * q - 1) / 12;
            SeifertData s = sd({p, q, 2 * p * q * k - 1});
            expect(o, cv.lambda == want,
                   "lambda " + s.label() + " = " + cv.lambda.str() + " != " + want.str());
            expect(o, mubar_seifert(s) == 0, "mubar " + s.label() + " != 0");
        }
}

void suite_two_sided_signature(CheckOutcome& o, double) {
    for (const auto& t : coprime_triples_up_to_product(3000)) {
        SeifertData s(t);
        Int lhs = sign_minus_KK(canonical_plumbing(s));
        Int lambda = casson_brieskorn(t[0], t[1], t[2]).lambda;
        Int rhs = -24 * lambda + 2 * (t[0] - 1) * (t[1] - 1) * (t[2] - 1);
        expect(o, lhs == rhs,
               s.label() + ": sign - K.K = " + lhs.str() + " != " + rhs.str());
    }
}

void suite_wu_uniqueness(CheckOutcome& o, double) {
    for (const PlumbingGraph& g : small_corpus()) {
        const std::size_t n = g.size();
        if (n > 12) continue;
        IntersectionMatrix m = build_intersection_matrix(g);
        WuClass w = wu_class(g);
        std::size_t solutions = 0;
        bool matches = false;
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            std::vector<int> cand(n);
            for (std::size_t i = 0; i < n; ++i) cand[i] = (mask >> i) & 1;
            bool characteristic = true;
            for (std::size_t i = 0; i < n && characteristic; ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (cand[j]) acc += m(i, j);
                characteristic = mod_floor(acc - m(i, i), 2) == 0;
            }
            if (characteristic) {
                ++solutions;
                if (cand == w.coords) matches = true;
            }
        }
        expect(o, solutions == 1 && matches,
               "Wu uniqueness failed on a " + std::to_string(n) + "-vertex graph (" +
                   std::to_string(solutions) + " solutions)");
    }
}

void suite_blowup_invariance(CheckOutcome& o, double) {
    std::mt19937 rng(20260810);
    std::vector<PlumbingGraph> corpus;
    for (const PlumbingGraph& g : small_corpus())
        if (is_homology_sphere(g)) corpus.push_back(g);
    for (int trial = 0; trial < 50; ++trial) {
        const PlumbingGraph& g = corpus[rng() % corpus.size()];
        BlowupSite site = BlowupSite::at_vertex(g.vertices()[rng() % g.size()].id);
        if (!g.edges().empty() && rng() % 2 == 0) {
            auto e = g.edges()[rng() % g.edges().size()];
            site = BlowupSite::on_edge(g.vertices()[e.first].id, g.vertices()[e.second].id);
        }
        PlumbingGraph b = graph_blowup(g, site);
        IntersectionMatrix mg = build_intersection_matrix(g);
        IntersectionMatrix mb = build_intersection_matrix(b);
        expect(o, abs_int(determinant(mb)) == abs_int(determinant(mg)),
               "blow-up changed |det|");
        FormSummary fg = signature(mg), fb = signature(mb);
        expect(o,
               fb.n_minus == fg.n_minus + 1 && fb.n_plus == fg.n_plus &&
                   fb.n_zero == fg.n_zero,
               "blow-up did not add exactly one negative eigenvalue");
        expect(o, mubar(b).value == mubar(g).value, "blow-up changed mubar");
    }
}

void suite_nu_two_periodic(CheckOutcome& o, double) {
    // every rank vector with entries in [0,3]; the 2-periodic ones have nu 0
    int checked = 0;
    for (std::size_t code = 0; code < (std::size_t(1) << 16); ++code) {
        FloerRanks f;
        for (int n = 0; n < 8; ++n) f.ranks[n] = (code >> (2 * n)) & 3;
        if (!is_two_periodic(f)) continue;
        ++checked;
        if (nu_from_ranks(f).numerator != 0) {
            expect(o, false, "nu != 0 on a 2-periodic vector");
            return;
        }
    }
    expect(o, checked == 16, "expected 16 two-periodic vectors with entries <= 3");
    // wider sweep over period blocks with entries up to 15
    for (int r0 = 0; r0 <= 15; ++r0)
        for (int r1 = 0; r1 <= 15; ++r1) {
            FloerRanks f;
            for (int n = 0; n < 8; n += 2) f.ranks[n] = r0;
            for (int n = 1; n < 8; n += 2) f.ranks[n] = r1;
            if (nu_from_ranks(f).numerator != 0) {
                expect(o, false, "nu != 0 on a 2-periodic block vector");
                return;
            }
        }
    expect(o, true, "");
}

void suite_even_form(CheckOutcome& o, double) {
    {
        EvenFormClass c = even_form_classify(build_intersection_matrix(e8_plus_h_graph(1, 1)));
        expect(o, c.e8_count == 1 && c.h_count == 1, "E8 + H did not classify as (1,1)");
    }
    for (int q : {3, 7, 11}) {
        int copies = (q + 1) / 4;
        EvenFormClass c =
            even_form_classify(build_intersection_matrix(e8_plus_h_graph(copies, 1)));
        expect(o, c.e8_count == copies && c.h_count == 1,
               "classification failed for q = " + std::to_string(q));
    }
    expect(o, !ten_eighths_check(20, 16), "2E8 + 2H not reported prohibited");
    expect(o, !ten_eighths_check(10, 8), "E8 + H not reported prohibited");
    expect(o, ten_eighths_check(12, 8), "E8 + 2H not reported admissible");
}

void suite_algebraic_splice(CheckOutcome& o, double) {
    expect(o, is_algebraic_splice(sd({4, 7, 9}), 3, sd({2, 3, 25}), 3),
           "splice of sigma(4,7,9) and sigma(2,3,25) not algebraic");
    expect(o, !is_algebraic_splice(sd({2, 3, 5}), 3, sd({2, 3, 5}), 3),
           "self-splice of sigma(2,3,5) reported algebraic");
    // Divisibility pins the equality case down completely: r coprime to pq
    // and r' coprime to p'q' force r r' = p p' q q' exactly when r = p'q'
    // and r' = pq (the degenerate zero-edge-determinant splice).
    auto triples = coprime_triples_up_to_product(300);
    for (const auto& a : triples)
        for (const auto& b : triples)
            if (a[2] * b[2] == a[0] * a[1] * b[0] * b[1] &&
                !(a[2] == b[0] * b[1] && b[2] == a[0] * a[1])) {
                expect(o, false, "equality outside the degenerate case");
                return;
            }
    expect(o, true, "");
}

void suite_floer_families(CheckOutcome& o, double) {
    expect(o, nu_from_ranks(braid_mazur_ranks(GradingParity::even)).numerator == 0,
           "nu != 0 on even braid-Mazur ranks");
    expect(o, nu_from_ranks(braid_mazur_ranks(GradingParity::odd)).numerator == 0,
           "nu != 0 on odd braid-Mazur ranks");
    for (long long p : {3, 5, 7})
        for (long long s : {1, 2}) {
            FloerRanks f = casson_harer_ranks(p, s, +1);
            expect(o, nu_from_ranks(f).numerator == 0,
                   "nu != 0 on casson-harer ranks p=" + std::to_string(p));
            expect(o, casson_from_ranks(f) == Rat(s * (p * p - 1) * (p * s + 3), 24),
                   "euler characteristic mismatch p=" + std::to_string(p));
        }
    for (long long p : {3, 5, 7}) {
        Rat from_ranks = casson_from_ranks(casson_harer_ranks(p, 1, +1));
        Int lambda = casson_brieskorn(p, p + 1, p + 2).lambda;
        expect(o, abs(numerator(from_ranks)) == abs_int(lambda) * denominator(from_ranks),
               "rank Euler characteristic disagrees with lattice Casson at p=" +
                   std::to_string(p));
    }
    {
        FloerRanks f = torus_knot_surgery_ranks(2, 3, 1);
        expect(o, nu_from_ranks(f).numerator == 0, "nu != 0 on torus-surgery ranks");
        expect(o, casson_from_ranks(f) == Rat(2), "casson_from_ranks(2,3,1) != 2");
        expect(o, casson_brieskorn(2, 3, 11).lambda == 2, "lambda(2,3,11) != 2");
    }
}

struct SuiteEntry {
    const char* name;
    std::function<void(CheckOutcome&, double)> fn;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> suites = {
        {"mubar-known-values", suite_mubar_known_values},
        {"r-known-values", suite_r_known_values},
        {"negativity-family", suite_negativity_family},
        {"additivity", suite_additivity},
        {"surgery-vanishing", suite_surgery_vanishing},
        {"surgery-relation", suite_surgery_relation},
        {"casson-closed-form", suite_casson_closed_form},
        {"two-sided-signature", suite_two_sided_signature},
        {"wu-uniqueness", suite_wu_uniqueness},
        {"blowup-invariance", suite_blowup_invariance},
        {"nu-two-periodic", suite_nu_two_periodic},
        {"even-form", suite_even_form},
        {"algebraic-splice", suite_algebraic_splice},
        {"floer-families", suite_floer_families},
    };
    return suites;
}

}  // namespace

std::vector<std::string> check_suite_names() {
    std::vector<std::string> names;
    for (const auto& s : registry()) names.push_back(s.name);
    return names;
}

std::vector<CheckOutcome> run_check(const std::string& name, double tolerance) {
    std::vector<CheckOutcome> out;
    for (const auto& s : registry()) {
        if (name != "all" && name != s.name) continue;
        CheckOutcome o;
        o.suite = s.name;
        s.fn(o, tolerance);
        out.push_back(std::move(o));
    }
    if (out.empty()) fail(Errc::UnknownSuite, "unknown check suite '" + name + "'");
    return out;
}

}  // namespace theta3
