#include "theta3/gauge.hpp"

#include <cmath>

namespace theta3 {

RValue r_invariant(const SeifertData& s, double tolerance) {
    const std::vector<Int>& a = s.fibers();
    const Int prod = s.product();
    const double n = static_cast<double>(a.size());
    double sum = 2.0 / prod.convert_to<double>() - 3.0 + n;
    for (const Int& ai_big : a) {
        const long long ai = to_longlong(ai_big);
        const Int m = prod / ai_big;       // coprime to a_i
        const Int ai_sq = ai_big * ai_big;
        const double ai_d = static_cast<double>(ai);
        double inner = 0.0;
        for (long long k = 1; k < ai; ++k) {
            // cot(pi a k / a_i^2) reduced exactly: a k mod a_i^2 is never 0
            const Int u = mod_floor(m * k * ai_big, ai_sq);
            const double x = u.convert_to<double>() / ai_sq.convert_to<double>();
            const double t = M_PI * static_cast<double>(k) / ai_d;
            const double sin_t = std::sin(t);
            inner += (std::cos(M_PI * x) / std::sin(M_PI * x)) * (std::cos(t) / sin_t) * sin_t * sin_t;
        }
        sum += 2.0 / ai_d * inner;
    }
    const double rounded = std::nearbyint(sum);
    const double residual = std::fabs(sum - rounded);
    if (!(residual < tolerance))
        fail(Errc::RoundingUnstable,
             "R(" + s.label() + ") residual " + std::to_string(residual) +
                 " exceeds tolerance " + std::to_string(tolerance));
    return RValue{Int(static_cast<long long>(rounded)), residual};
}

bool r_test(const SeifertData& s, double tolerance) {
    return r_invariant(s, tolerance).value >= 0;
}

Int milnor_fiber_signature(const Int& p, const Int& q, const Int& r) {
    for (const Int* v : {&p, &q, &r})
        if (*v < 1) fail(Errc::InvalidSeifertData, "Brieskorn exponent " + v->str() + " < 1");
    if (gcd_int(p, q) != 1 || gcd_int(p, r) != 1 || gcd_int(q, r) != 1)
        fail(Errc::InvalidSeifertData, "Brieskorn exponents must be pairwise coprime");
    if (p * q * r > Int(1) << 40)
        throw std::overflow_error("lattice count infeasible: pqr exceeds 2^40");
    const long long a = to_longlong(p), b = to_longlong(q), c = to_longlong(r);
    const long long abc = a * b * c;
    long long sigma = 0;  // sigma+ - sigma-
    for (long long x = 1; x < a; ++x) {
        const long long tx = x * b * c;
        for (long long y = 1; y < b; ++y) {
            const long long txy = tx + y * a * c;
            // t = x/a + y/b + z/c scaled by abc; never an integer multiple of abc
            for (long long z = 1; z < c; ++z) {
                const long long t = txy + z * a * b;  // 0 < t < 3 abc
                if (t < abc)
                    ++sigma;
                else if (t < 2 * abc)
                    --sigma;
                else
                    ++sigma;
            }
        }
    }
    return Int(sigma);
}

CassonValue casson_brieskorn(const Int& p, const Int& q, const Int& r) {
    Int sig = milnor_fiber_signature(p, q, r);
    if (sig % 8 != 0)
        fail(Errc::NonDivisibleBy8, "Milnor fiber signature " + sig.str() + " not divisible by 8");
    return CassonValue{-sig / 8, sig, (p - 1) * (q - 1) * (r - 1)};
}

CassonBoundTest casson_bound_test(const Int& p, const Int& q, const Int& r) {
    CassonValue cv = casson_brieskorn(p, q, r);
    Rat bound(cv.milnor_rank, 12);
    return CassonBoundTest{bound, cv.lambda, Rat(cv.lambda) > bound, Rat(-cv.lambda) > bound};
}

std::vector<Int> canonical_class(const PlumbingGraph& g) {
    IntersectionMatrix m = build_intersection_matrix(g);
    if (abs_int(determinant(m)) != 1)
        fail(Errc::NotHomologySphere, "canonical class needs |det A| = 1");
    const std::size_t n = m.size();
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = -m(i, i) - 2;
    std::vector<Rat> x = solve_symmetric(m, d);
    std::vector<Int> k(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (denominator(x[i]) != 1)
            fail(Errc::SolveFailure, "canonical class is not integral");
        k[i] = numerator(x[i]);
    }
    // verify A K = d exactly; d = diag(A) mod 2, so K is characteristic
    for (std::size_t i = 0; i < n; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * k[j];
        if (acc != d[i])
            fail(Errc::SolveFailure, "canonical class failed adjunction verification");
    }
    return k;
}

Int sign_minus_KK(const PlumbingGraph& g) {
    IntersectionMatrix m = build_intersection_matrix(g);
    std::vector<Int> k = canonical_class(g);
    return signature(m).signature() - quadratic_form(m, k);
}

bool ten_eighths_check(const Int& rank, const Int& sign) {
    if (rank <= 0) throw std::invalid_argument("ten_eighths_check: rank must be positive");
    if (sign == 0) return true;  // quotient undefined; inequality vacuous
    return 8 * rank > 10 * abs_int(sign);
}

EvenFormClass even_form_classify(const IntersectionMatrix& m) {
    FormSummary fs = signature(m);
    if (fs.parity != Parity::even)
        fail(Errc::NotEven, "form has an odd diagonal entry");
    if (abs_int(fs.determinant) != 1)
        fail(Errc::NotUnimodular, "form has |det| = " + abs_int(fs.determinant).str());
    if (fs.n_plus == 0 || fs.n_minus == 0)
        fail(Errc::Definite, "classification by rank and signature needs an indefinite form");
    Int sig = fs.signature();
    if (sig % 8 != 0)
        fail(Errc::NonDivisibleBy8, "even unimodular signature " + sig.str() + " not divisible by 8");
    Int e8 = sig / 8;
    Int rem = Int(fs.rank) - 8 * abs_int(e8);
    if (rem < 0 || rem % 2 != 0)
        fail(Errc::SolveFailure, "rank " + std::to_string(fs.rank) +
                                     " inconsistent with signature " + sig.str());
    return EvenFormClass{e8, rem / 2};
}

std::optional<TorusSurgeryMember> odd_torus_surgery_member(const SeifertData& s) {
    if (!s.is_triple()) return std::nullopt;
    const Int p = s.fibers()[0], q = s.fibers()[1], r = s.fibers()[2];
    if (p < 2) return std::nullopt;
    const Int pq = p * q;
    if (r <= pq || (r - 1) % pq != 0) return std::nullopt;
    const Int k = (r - 1) / pq;
    if (k % 2 == 0) return std::nullopt;
    return TorusSurgeryMember{p, q, k};
}

const char* outcome_name(Verdict::Outcome o) {
    switch (o) {
        case Verdict::Outcome::fires: return "fires";
        case Verdict::Outcome::silent: return "silent";
        case Verdict::Outcome::not_applicable: return "not-applicable";
    }
    return "?";
}

ObstructionReport obstruction_report(const SeifertData& s, double tolerance) {
    PlumbingGraph g = canonical_plumbing(s);
    MubarValue mu = mubar(g);
    MubarObstruction ob = mubar_obstruction(g);
    RValue r = r_invariant(s, tolerance);

    ObstructionReport rep{s, mu.value, r, std::nullopt, {}};

    {
        Verdict v;
        v.criterion = "mubar-negative";
        if (!ob.applies) {
            v.outcome = Verdict::Outcome::not_applicable;
            v.certificate = "resolution form is not negative definite";
        } else if (ob.bounds_ball_excluded) {
            v.outcome = Verdict::Outcome::fires;
            v.certificate = "mubar = " + mu.value.str() +
                            " < 0 on a negative-definite resolution: " + s.label() +
                            " bounds no homology ball and has infinite order in the"
                            " homology cobordism group";
        } else {
            v.outcome = Verdict::Outcome::silent;
            v.certificate = "mubar = " + mu.value.str() + " >= 0";
        }
        rep.verdicts.push_back(std::move(v));
    }
    {
        Verdict v;
        v.criterion = "r-nonnegative";
        if (r.value >= 0) {
            v.outcome = Verdict::Outcome::fires;
            v.certificate = "R = " + r.value.str() + " >= 0: " + s.label() +
                            " is not homology cobordant to zero";
        } else {
            v.outcome = Verdict::Outcome::silent;
            v.certificate = "R = " + r.value.str() + " < 0";
        }
        rep.verdicts.push_back(std::move(v));
    }
    {
        Verdict v;
        v.criterion = "casson-bound";
        if (!s.is_triple()) {
            v.outcome = Verdict::Outcome::not_applicable;
            v.certificate = "Casson invariant computed for three-fiber data only";
        } else {
            CassonBoundTest t =
                casson_bound_test(s.fibers()[0], s.fibers()[1], s.fibers()[2]);
            rep.casson = casson_brieskorn(s.fibers()[0], s.fibers()[1], s.fibers()[2]);
            std::string both = "lambda = " + t.lambda.str() + ", bound = " +
                               numerator(t.bound).str() + "/" + denominator(t.bound).str() +
                               "; mirrored orientation " +
                               (t.mirror_violated ? "violates" : "respects") + " the bound";
            if (t.violated) {
                v.outcome = Verdict::Outcome::fires;
                v.certificate = both + ": not homology cobordant to zero";
            } else {
                v.outcome = Verdict::Outcome::silent;
                v.certificate = both;
            }
        }
        rep.verdicts.push_back(std::move(v));
    }
    std::optional<TorusSurgeryMember> fam = odd_torus_surgery_member(s);
    {
        Verdict v;
        v.criterion = "spin-ten-eighths";
        // Even-plumbing form is known in closed form for p = 2, q = 3 mod 4:
        // (q+1)/4 copies of E8 plus one hyperbolic plane.
        if (fam && fam->p == 2 && mod_floor(fam->q, 4) == 3) {
            Int copies = (fam->q + 1) / 4;
            Int rank = 8 * copies + 2, sign = 8 * copies;
            bool admissible = ten_eighths_check(rank, sign);
            std::string form = copies.str() + "*E8 + H (rank " + rank.str() + ", sign " +
                               sign.str() + ")";
            if (!admissible) {
                v.outcome = Verdict::Outcome::fires;
                v.certificate = "even plumbing form " + form +
                                " fails rank/|sign| > 10/8: no multiple of " + s.label() +
                                " bounds a contractible 4-manifold";
            } else {
                v.outcome = Verdict::Outcome::silent;
                v.certificate = "even plumbing form " + form + " is 10/8-admissible";
            }
        } else {
            v.outcome = Verdict::Outcome::not_applicable;
            v.certificate = "no even plumbing form available in closed form";
        }
        rep.verdicts.push_back(std::move(v));
    }
    {
        Verdict v;
        v.criterion = "torus-surgery-family";
        if (fam) {
            v.outcome = Verdict::Outcome::fires;
            v.certificate = s.label() + " = sigma(p,q,pqk+1) with p = " + fam->p.str() +
                            ", q = " + fam->q.str() + ", k = " + fam->k.str() +
                            " odd: neither it nor any multiple bounds a smooth"
                            " contractible 4-manifold";
        } else {
            v.outcome = Verdict::Outcome::silent;
            v.certificate = "not of the form sigma(p,q,pqk+1) with k odd";
        }
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

}  // namespace theta3
