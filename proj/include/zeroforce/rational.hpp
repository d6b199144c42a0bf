#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace zf {

using Integer = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational (always reduced, denominator > 0).
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(Rational base, unsigned exp) {
    Rational out = 1;
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

}  // namespace zf
