#pragma once

#include "fibcode/bigint.hpp"
#include "fibcode/matrix.hpp"

namespace fibcode {

// F_1 = F_2 = 1, F_{n+1} = F_n + F_{n-1}. The classical sequence indexes
// from 1; F_0 = 0 exists internally so Q^1 is well defined.
BigInt fib(int n);  // n >= 1, throws DomainError otherwise

// Q^n = [[F_{n+1}, F_n], [F_n, F_{n-1}]], det = (-1)^n.  n >= 1.
Mat2 q_power(int n);

// Exact inverse of Q^n; q_power(n) * q_power_inverse(n) == I.  n >= 1.
Mat2 q_power_inverse(int n);

// Frozen bundle of the Fibonacci values an order-n code keeps querying.
// Immutable after construction; safe to share across threads.
struct CodeParams {
  int n = 0;
  BigInt f_nm1;  // F_{n-1}
  BigInt f_n;    // F_n
  BigInt f_np1;  // F_{n+1}

  static CodeParams make(int n);  // n >= 2
  bool odd() const { return n % 2 != 0; }
  // (-1)^n * check, the value det C must equal on a clean codeword.
  BigInt expected_det(const BigInt& check) const { return odd() ? -check : check; }
  // Message entries lie in [1, F_{n-1}).
  const BigInt& entry_bound() const { return f_nm1; }
};

// Where a ratio u/v sits relative to the closed interval
// [a, b] = [F_{n+1}/F_n, F_n/F_{n-1}] (odd n).  Zero denominators and the
// (0,0) pair never land Inside.
enum class RatioSide { Below, Inside, Above, Undefined };

RatioSide ratio_side(const BigInt& num, const BigInt& den, const CodeParams& p);

inline bool ratio_in_closed(const BigInt& num, const BigInt& den,
                            const CodeParams& p) {
  return ratio_side(num, den, p) == RatioSide::Inside;
}

// Strict membership in the open interval (a, b); used by the shift scans.
bool ratio_strictly_inside(const BigInt& num, const BigInt& den,
                           const CodeParams& p);

// Exact golden-ratio bracketing interval for odd n >= 3:
// a = F_{n+1}/F_n < phi < b = F_n/F_{n-1}, width 1/(F_n * F_{n-1}).
struct ApproxInterval {
  Rational lower;
  Rational upper;
  int order = 0;
};

ApproxInterval approx_interval(int n);  // n odd >= 3, throws DomainError

// round(phi^n / sqrt(5)); agrees with fib(n) for every supported n.
// Internal fixed-point precision scales with n; if the accumulated error
// bound cannot certify the rounding, throws PrecisionError instead of
// returning a possibly wrong value.
BigInt binet_estimate(int n);

// Bit length of a positive integer (position of the highest set bit + 1).
unsigned bit_length(const BigInt& v);

}  // namespace fibcode
