#pragma once

#include "fibcode/bigint.hpp"

namespace fibcode {

// General solution of p*x - q*y = r over the integers.  When solvable the
// full family is (x0 + step_x * t, y0 + step_y * t) for t in Z, with
// steps (q/g, p/g) normalized so scanning t upward never decreases x.
struct DiophantineFamily {
  bool solvable = false;
  BigInt x0;
  BigInt y0;
  BigInt step_x;
  BigInt step_y;
};

// Extended Euclid on nonnegative inputs: returns (g, s, t) with
// a*s + b*t = g = gcd(a, b).
void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s,
                  BigInt& t);

// Solvable iff gcd(p, q) divides r; throws DomainError when p and q are both
// zero (the equation then constrains nothing).
DiophantineFamily solve_linear_diophantine(const BigInt& p, const BigInt& q,
                                           const BigInt& r);

}  // namespace fibcode
