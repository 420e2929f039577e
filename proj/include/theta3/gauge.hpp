#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta3/plumbing.hpp"
#include "theta3/seifert.hpp"

namespace theta3 {

struct RValue {
    Int value;        // nearest integer to the trigonometric sum
    double residual;  // distance from the floating sum to that integer
};

/// Fintushel-Stern invariant
///   R(a_1,...,a_n) = 2/a - 3 + n
///     + sum_i (2/a_i) sum_{k=1}^{a_i-1} cot(pi a k/a_i^2) cot(pi k/a_i) sin^2(pi k/a_i),
/// a = a_1...a_n. Evaluated in double precision with exact integer argument
/// reduction; the rounding residual is audited against the tolerance.
RValue r_invariant(const SeifertData& s, double tolerance = 1e-6);

/// True (obstruction fires: not homology cobordant to zero) iff R >= 0;
/// bounding a homology ball forces R < 0.
bool r_test(const SeifertData& s, double tolerance = 1e-6);

/// Signature of the Milnor fiber of the Brieskorn singularity x^p+y^q+z^r,
/// by the lattice count sigma+ - sigma- over integer triples 0 < x_i < a_i
/// classified by the fractional part of x_1/a_1 + x_2/a_2 + x_3/a_3 mod 2.
/// Runtime O(pqr).
Int milnor_fiber_signature(const Int& p, const Int& q, const Int& r);

struct CassonValue {
    Int lambda;            // -milnor_signature / 8
    Int milnor_signature;  // sign of the Milnor fiber
    Int milnor_rank;       // (p-1)(q-1)(r-1)
};

CassonValue casson_brieskorn(const Int& p, const Int& q, const Int& r);

/// Casson bound: a Seifert triple homology cobordant to zero satisfies
/// lambda <= (p-1)(q-1)(r-1)/12. `violated` certifies nonzero order; the
/// mirrored test applies the same bound to the reversed orientation.
struct CassonBoundTest {
    Rat bound;
    Int lambda;
    bool violated;         // lambda > bound
    bool mirror_violated;  // -lambda > bound
};

CassonBoundTest casson_bound_test(const Int& p, const Int& q, const Int& r);

/// The adjunction vector: unique integer K with (A K)_i = -a_ii - 2;
/// characteristic mod 2 by construction (verified). Needs |det A| = 1.
std::vector<Int> canonical_class(const PlumbingGraph& g);

/// signature(A) - K^t A K for the canonical class K.
Int sign_minus_KK(const PlumbingGraph& g);

/// Furuta inequality for the even intersection form of a closed smooth spin
/// 4-manifold: admissible iff rank/|sign| > 10/8, i.e. 8 rank > 10 |sign|.
/// Equality counts as prohibited. Zero signature is vacuous (admissible).
bool ten_eighths_check(const Int& rank, const Int& sign);

/// Decomposition of an even indefinite unimodular form as e8_count copies of
/// the E8 form (sign of the definite part carried by the sign of e8_count)
/// plus h_count hyperbolic planes; determined by rank and signature alone.
struct EvenFormClass {
    Int e8_count;
    Int h_count;
};

EvenFormClass even_form_classify(const IntersectionMatrix& m);

/// Membership in the family sigma(p, q, pqk+1) with k > 0 odd: the
/// (-1/k)-surgeries on torus knots for which no multiple bounds a smooth
/// contractible 4-manifold.
struct TorusSurgeryMember {
    Int p, q, k;
};

std::optional<TorusSurgeryMember> odd_torus_surgery_member(const SeifertData& s);

struct Verdict {
    std::string criterion;
    enum class Outcome { fires, silent, not_applicable } outcome;
    std::string certificate;
};

struct ObstructionReport {
    SeifertData seifert;
    Int mubar;
    RValue r;
    std::optional<CassonValue> casson;  // three-fiber data only
    std::vector<Verdict> verdicts;
};

/// One verdict per applicable criterion: the mubar sign test on the
/// negative-definite resolution, the R sign test, the Casson bound (triples),
/// the even-form 10/8 argument where the even plumbing is known, and the
/// odd torus-surgery family membership.
ObstructionReport obstruction_report(const SeifertData& s, double tolerance = 1e-6);

const char* outcome_name(Verdict::Outcome o);

}  // namespace theta3
