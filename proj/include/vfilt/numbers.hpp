#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace vfilt {

/// Arbitrary-precision integer: exponents, degrees, series values.
using Int = boost::multiprecision::cpp_int;

/// Exact rational: LP pivots, fitted slopes and intercepts.
using Rational = boost::multiprecision::cpp_rational;

/// "5/2", "-1/2", or plain "3" when the denominator is 1.
inline std::string rational_to_string(const Rational& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Smallest integer c with c*c >= x, for x >= 0.
inline Int ceil_sqrt(const Int& x) {
  Int s = boost::multiprecision::sqrt(x);  // floor of the square root
  if (s * s < x) ++s;
  return s;
}

}  // namespace vfilt
