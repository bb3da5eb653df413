#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "stag/errors.hpp"

namespace stag {

// All public arithmetic is exact.  Numerators/denominators are
// arbitrary-precision integers; no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

/// Narrow an exact rational to int64, or throw if it is not an integer
/// (an integrality invariant was violated) or does not fit.
inline std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) {
        throw InvariantError("expected an integer, got " + q.str());
    }
    const Int n = boost::multiprecision::numerator(q);
    if (n > std::numeric_limits<std::int64_t>::max() ||
        n < std::numeric_limits<std::int64_t>::min()) {
        throw InvariantError("integer out of int64 range: " + n.str());
    }
    return static_cast<std::int64_t>(n);
}

} // namespace stag
