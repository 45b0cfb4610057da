#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lincount {

/// All counts and coefficients are exact arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;

inline Int factorial(long long n) {
    Int f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Binomial coefficient with the convention C(n,k) = 0 for k < 0 or k > n.
inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int num = 1;
    for (long long i = 0; i < k; ++i) {
        num *= n - i;
        num /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return num;
}

inline Int pow_int(const Int& base, long long exp) {
    Int result = 1;
    Int b = base;
    for (long long e = exp; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

/// Exact division; a nonzero remainder means a broken identity, not bad input.
inline Int exact_div(const Int& num, const Int& den) {
    if (den == 0) throw std::logic_error("exact_div: zero denominator");
    Int q = num / den;
    if (q * den != num)
        throw std::logic_error("exact_div: " + num.str() + " not divisible by " + den.str());
    return q;
}

}  // namespace lincount
