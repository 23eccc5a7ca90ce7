#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "fmf/errors.hpp"

namespace fmf {

// All dimension counts are exact and unbounded; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

// Binomial coefficient C(top, k) for arbitrary integer top and k >= 0,
// via the polynomial extension top(top-1)...(top-k+1)/k!.  Each partial
// quotient is again a binomial coefficient, so the division stays exact.
inline Int binomial(long long top, long long k) {
    if (k < 0) throw input_error("binomial: k must be nonnegative");
    Int r = 1;
    for (long long j = 1; j <= k; ++j) {
        r *= Int(top - j + 1);
        r /= j;
    }
    return r;
}

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

} // namespace fmf
