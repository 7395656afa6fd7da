#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace emb7 {

/// Arbitrary-precision integer. Everything in this library is exact;
/// intermediate values in normal-form computations can exceed any fixed
/// width even for small inputs.
using Int = boost::multiprecision::cpp_int;

using IntVec = std::vector<Int>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b)
{
    return boost::multiprecision::gcd(a, b);
}

/// Floor division: the unique q with a = q*b + r, 0 <= r < |b| for b > 0
/// (and -|b| < r <= 0 for b < 0; we follow sign-of-b floor semantics).
inline Int floordiv(const Int& a, const Int& b)
{
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int floormod(const Int& a, const Int& b)
{
    return a - b * floordiv(a, b);
}

/// Canonical residue of a modulo d, with the convention that modulus 0
/// means no reduction (Z_0 = Z).
inline Int mod_reduce(const Int& a, const Int& d)
{
    if (d == 0) return a;
    return floormod(a, d);
}

/// gcd over a coordinate vector; empty or all-zero input gives 0.
inline Int vec_gcd(const IntVec& v)
{
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

inline long long to_ll(const Int& a)
{
    if (a > std::numeric_limits<long long>::max() || a < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer too large for machine word: " + a.str());
    return a.convert_to<long long>();
}

} // namespace emb7
