#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace betashift {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt floor_of(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;
  if (num % den != 0 && num < 0) --quot;
  return quot;
}

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

}  // namespace betashift
