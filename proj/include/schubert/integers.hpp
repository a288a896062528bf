#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace schubert {

/// Exact arbitrary-precision signed integer used for every coefficient.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, stored reduced.
using Rational = boost::rational<Int>;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

} // namespace schubert
