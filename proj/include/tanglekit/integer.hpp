#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

namespace tanglekit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// binomial(n, k) with the out-of-range convention binomial(n, k) = 0
/// for k < 0 or k > n, which keeps the counting sums total.
inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // exact at every step along a row of Pascal's triangle
    }
    return r;
}

inline Int int_pow(Int base, unsigned long exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

/// Correctly scaled big-rational to double conversion. Direct conversion of
/// numerator and denominator would overflow to inf for values like p(2001).
inline double to_double(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (num == 0) return 0.0;
    bool neg = num < 0;
    if (neg) num = -num;
    auto bits = [](const Int& v) { return static_cast<long>(boost::multiprecision::msb(v)); };
    long bn = bits(num), bd = bits(den);
    // keep ~96 significant bits of each operand
    long sn = bn > 96 ? bn - 96 : 0;
    long sd = bd > 96 ? bd - 96 : 0;
    double q = static_cast<double>(num >> sn) / static_cast<double>(den >> sd);
    double val = std::ldexp(q, static_cast<int>(sn - sd));
    return neg ? -val : val;
}

inline double to_double(const Int& v) { return to_double(Rat(v)); }

} // namespace tanglekit
