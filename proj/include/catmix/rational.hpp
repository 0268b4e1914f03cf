#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace catmix {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// 1 / 2^e as an exact rational.
inline Rational pow2_inv(unsigned e) {
    BigInt d = 1;
    d <<= e;
    return Rational(1, d);
}

} // namespace catmix
