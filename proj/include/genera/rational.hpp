// Exact scalar types used throughout: arbitrary-precision integers and
// rationals. All arithmetic in this library is exact; nothing here or
// downstream ever touches floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace genera {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// (-1)^e for any integer e, including negative exponents.
inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace genera
