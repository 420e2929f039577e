#include "theta3/floer.hpp"

namespace theta3 {

namespace {

// (-1)^{(n+1)(n+2)/2} for n = 0..7
constexpr int kNuSign[8] = {-1, -1, +1, +1, -1, -1, +1, +1};

void require_nonnegative(const FloerRanks& f) {
    for (const Int& r : f.ranks)
        if (r < 0) throw std::invalid_argument("Floer rank must be nonnegative");
}

FloerRanks even_graded(const Int& rank) {
    if (rank < 0) fail(Errc::NonIntegralRank, "closed-form rank is negative");
    FloerRanks f;
    for (int n = 0; n < 8; n += 2) f.ranks[n] = rank;
    return f;
}

}  // namespace

Rat casson_from_ranks(const FloerRanks& f) {
    require_nonnegative(f);
    Int acc = 0;
    for (int n = 0; n < 8; ++n) acc += (n % 2 == 0 ? f.ranks[n] : -f.ranks[n]);
    return Rat(acc, 2);
}

NuValue nu_from_ranks(const FloerRanks& f) {
    require_nonnegative(f);
    Int acc = 0;
    for (int n = 0; n < 8; ++n) acc += kNuSign[n] * f.ranks[n];
    return NuValue{acc, Rat(acc, 2)};
}

bool is_two_periodic(const FloerRanks& f) {
    for (int n = 0; n < 8; ++n)
        if (f.ranks[n] != f.ranks[(n + 2) % 8]) return false;
    return true;
}

bool is_four_periodic(const FloerRanks& f) {
    for (int n = 0; n < 8; ++n)
        if (f.ranks[n] != f.ranks[(n + 4) % 8]) return false;
    return true;
}

FloerRanks braid_mazur_ranks(GradingParity parity) {
    FloerRanks f;
    for (int n = parity == GradingParity::even ? 0 : 1; n < 8; n += 2) f.ranks[n] = 1;
    return f;
}

FloerRanks casson_harer_ranks(const Int& p, const Int& s, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (p < 3 || p % 2 == 0 || s < 1)
        fail(Errc::NonIntegralRank, "family needs odd p > 1 and s >= 1");
    Int num = s * (p * p - 1) * (p * s + 3 * sign);
    if (num < 0 || num % 48 != 0)
        fail(Errc::NonIntegralRank, "s(p^2-1)(ps" + std::string(sign > 0 ? "+" : "-") +
                                        "3)/48 is not a nonnegative integer");
    return even_graded(num / 48);
}

FloerRanks torus_knot_surgery_ranks(const Int& p, const Int& q, const Int& n) {
    if (p < 2 || q < 2 || gcd_int(p, q) != 1)
        fail(Errc::NonIntegralRank, "needs coprime p, q >= 2");
    if (n < 1) fail(Errc::NonIntegralRank, "surgery parameter n must be >= 1");
    Int num = n * (p * p - 1) * (q * q - 1);
    if (num % 24 != 0)
        fail(Errc::NonIntegralRank, "n(p^2-1)(q^2-1)/24 is not an integer");
    return even_graded(num / 24);
}

bool nu_mod2_matches_rochlin(const FloerRanks& f, int mu) {
    if (mu != 0 && mu != 1) throw std::invalid_argument("mu must be 0 or 1");
    if (!is_four_periodic(f)) fail(Errc::NotFourPeriodic, "rank vector is not 4-periodic");
    NuValue nu = nu_from_ranks(f);
    if (nu.numerator % 2 != 0) fail(Errc::NonIntegralNu, "nu is not an integer");
    return mod_floor(nu.numerator / 2, 2) == mu;
}

FloerRanks grading_reversal(const FloerRanks& f) {
    FloerRanks out;
    for (int n = 0; n < 8; ++n) out.ranks[n] = f.ranks[((3 - n) % 8 + 8) % 8];
    return out;
}

}  // namespace theta3
