#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fibcode {

// All code arithmetic is exact: arbitrary-precision integers and rationals.
// cpp_rational keeps the canonical form (lowest terms, positive denominator).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_int division truncates toward zero; correction formulas need true
// floor/ceil on signed values.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a % b;
  if (r != 0 && ((r < 0) == (b < 0))) ++q;
  return q;
}

}  // namespace fibcode
