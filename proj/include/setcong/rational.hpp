#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace setcong {

// All geometry and LP work is exact; no floating point anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

} // namespace setcong
