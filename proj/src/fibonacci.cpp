#include "fibcode/fibonacci.hpp"

#include <utility>

#include "fibcode/errors.hpp"

namespace fibcode {

namespace {

// F_k for k >= 0, iterative.
BigInt fib0(int k) {
  BigInt a = 0, b = 1;  // F_0, F_1
  for (int i = 0; i < k; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

}  // namespace

BigInt fib(int n) {
  if (n < 1) throw DomainError("fib: order must be >= 1");
  return fib0(n);
}

Mat2 q_power(int n) {
  if (n < 1) throw DomainError("q_power: order must be >= 1");
  CodeParams p = CodeParams::make(n >= 2 ? n : 2);
  if (n == 1) return Mat2(1, 1, 1, 0);
  return Mat2(p.f_np1, p.f_n, p.f_n, p.f_nm1);
}

Mat2 q_power_inverse(int n) {
  if (n < 1) throw DomainError("q_power_inverse: order must be >= 1");
  BigInt f_nm1 = fib0(n - 1), f_n = fib0(n), f_np1 = fib0(n + 1);
  if (n % 2 == 0) return Mat2(f_nm1, -f_n, -f_n, f_np1);
  return Mat2(-f_nm1, f_n, f_n, -f_np1);
}

CodeParams CodeParams::make(int n) {
  if (n < 2) throw DomainError("code order must be >= 2");
  CodeParams p;
  p.n = n;
  p.f_nm1 = fib0(n - 1);
  p.f_n = fib0(n);
  p.f_np1 = p.f_n + p.f_nm1;
  return p;
}

RatioSide ratio_side(const BigInt& num, const BigInt& den, const CodeParams& p) {
  BigInt u = num, v = den;
  if (v == 0) {
    if (u > 0) return RatioSide::Above;
    if (u < 0) return RatioSide::Below;
    return RatioSide::Undefined;
  }
  if (v < 0) {
    u = -u;
    v = -v;
  }
  if (u * p.f_nm1 > v * p.f_n) return RatioSide::Above;   // ratio > b
  if (u * p.f_n < v * p.f_np1) return RatioSide::Below;   // ratio < a
  return RatioSide::Inside;
}

bool ratio_strictly_inside(const BigInt& num, const BigInt& den,
                           const CodeParams& p) {
  BigInt u = num, v = den;
  if (v == 0) return false;
  if (v < 0) {
    u = -u;
    v = -v;
  }
  return u * p.f_n > v * p.f_np1 && u * p.f_nm1 < v * p.f_n;
}

ApproxInterval approx_interval(int n) {
  if (n < 3 || n % 2 == 0)
    throw DomainError("approx_interval: order must be odd and >= 3");
  CodeParams p = CodeParams::make(n);
  ApproxInterval iv;
  iv.lower = Rational(p.f_np1, p.f_n);
  iv.upper = Rational(p.f_n, p.f_nm1);
  iv.order = n;
  return iv;
}

unsigned bit_length(const BigInt& v) {
  if (v <= 0) throw DomainError("bit_length: value must be positive");
  return boost::multiprecision::msb(v) + 1;
}

namespace {

// (a * b) >> frac, the truncating fixed-point product.
BigInt fx_mul(const BigInt& a, const BigInt& b, unsigned frac) {
  return (a * b) >> frac;
}

BigInt fx_pow(BigInt base, int e, unsigned frac) {
  BigInt acc = BigInt(1) << frac;
  while (e > 0) {
    if (e & 1) acc = fx_mul(acc, base, frac);
    base = fx_mul(base, base, frac);
    e >>= 1;
  }
  return acc;
}

}  // namespace

BigInt binet_estimate(int n) {
  if (n < 1) throw DomainError("binet_estimate: order must be >= 1");
  // phi^n needs ~0.7n integer bits; carry that many fractional bits plus a
  // generous guard so truncation can never flip the rounding.
  const unsigned frac = static_cast<unsigned>(n) + 96;
  const BigInt one = BigInt(1) << frac;
  const BigInt sqrt5 = boost::multiprecision::sqrt(BigInt(5) << (2 * frac));
  const BigInt phi = (one + sqrt5) >> 1;
  const BigInt phi_n = fx_pow(phi, n, frac);
  const BigInt value = (phi_n << frac) / sqrt5;  // phi^n / sqrt(5), fixed point

  const BigInt rounded = (value + (BigInt(1) << (frac - 1))) >> frac;

  // Conservative absolute error bound in fixed-point units: each of the
  // O(log n) multiplications contributes at most one truncated unit scaled
  // by the running magnitude.
  unsigned mults = 2 * bit_length(BigInt(n)) + 4;
  BigInt err = BigInt(mults) * ((phi_n >> frac) + 1) + mults;
  BigInt dist = value - (rounded << frac);
  if (dist < 0) dist = -dist;
  if (dist + err >= (BigInt(1) << (frac - 1)))
    throw PrecisionError("binet_estimate: precision budget exceeded");
  return rounded;
}

}  // namespace fibcode
