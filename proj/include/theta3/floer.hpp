#pragma once

#include <array>

#include "theta3/errors.hpp"
#include "theta3/numeric.hpp"

namespace theta3 {

/// Rational ranks of the eight instanton Floer groups, graded mod 8. Rank
/// vectors are input data or closed-form generator output, never computed
/// from gauge theory here.
struct FloerRanks {
    std::array<Int, 8> ranks{};

    bool operator==(const FloerRanks& o) const { return ranks == o.ranks; }
};

struct NuValue {
    Int numerator;  // sum with signs (-,-,+,+,-,-,+,+); nu = numerator / 2
    Rat value;
};

/// Casson invariant as one-half of the Euler characteristic of Floer
/// homology: (1/2) sum (-1)^n r_n.
Rat casson_from_ranks(const FloerRanks& f);

/// nu = (1/2) sum_n (-1)^{(n+1)(n+2)/2} r_n; the sign pattern over
/// n = 0..7 is (-,-,+,+,-,-,+,+). Integrality is not assumed.
NuValue nu_from_ranks(const FloerRanks& f);

bool is_two_periodic(const FloerRanks& f);   // r_n = r_{n+2} mod 8
bool is_four_periodic(const FloerRanks& f);  // r_n = r_{n+4} mod 8

enum class GradingParity { even, odd };

/// Ranks of Mazur-type homology spheres built from a braid tangle: Z in each
/// grading of one parity, trivial in the other (which parity depends on the
/// orientation and is supplied by the caller). Independent of the framing.
FloerRanks braid_mazur_ranks(GradingParity parity);

/// Ranks of sigma(p, ps+1, ps+2) (sign +1) or sigma(p, ps-1, ps-2) (sign -1),
/// p odd > 1: s(p^2-1)(ps+-3)/48 in each even grading, zero in odd ones.
FloerRanks casson_harer_ranks(const Int& p, const Int& s, int sign);

/// Ranks of the (-1/n)-surgery on T(p,q) # mirror T(p,q):
/// n(p^2-1)(q^2-1)/24 in each even grading, zero in odd ones.
FloerRanks torus_knot_surgery_ranks(const Int& p, const Int& q, const Int& n);

/// Whether nu reduces mod 2 to the given Rochlin invariant; meaningful only
/// for 4-periodic rank vectors, where nu is automatically an integer.
bool nu_mod2_matches_rochlin(const FloerRanks& f, int mu);

/// Index reversal r_n -> r_{(3-n) mod 8}. This is the convention under which
/// both nu and the Euler characteristic change sign, mirroring orientation
/// reversal on the families above; it is a bookkeeping convention of this
/// toolkit, not a statement about Floer theory.
FloerRanks grading_reversal(const FloerRanks& f);

}  // namespace theta3
