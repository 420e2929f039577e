#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace theta3 {

// Exact arithmetic everywhere: determinants of continued-fraction plumbings
// overflow 64-bit integers long before the graphs get interesting.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Floor division with nonnegative remainder, q > 0.
inline Int mod_floor(const Int& a, const Int& q) {
    Int r = a % q;
    if (r < 0) r += q;
    return r;
}

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), returned in [0, m).
Int mod_inverse(const Int& a, const Int& m);

// Converts to a machine integer; throws std::overflow_error when out of range.
long long to_longlong(const Int& x);

}  // namespace theta3
