#include "doctest.h"
#include "fibcode/errors.hpp"
#include "fibcode/fibonacci.hpp"

using namespace fibcode;

TEST_CASE("fib: base cases and classic values") {
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(5) == 5);
  CHECK(fib(6) == 8);
  CHECK(fib(10) == 55);
  CHECK_THROWS_AS(fib(0), DomainError);
  CHECK_THROWS_AS(fib(-3), DomainError);
}

TEST_CASE("q_power: Fibonacci entries and Cassini determinant") {
  CHECK(q_power(5) == Mat2(8, 5, 5, 3));
  CHECK(q_power(2) == Mat2(2, 1, 1, 1));
  CHECK(q_power(1) == Mat2(1, 1, 1, 0));
  CHECK(q_power(5).det() == -1);
  CHECK(q_power(4).det() == 1);
}

TEST_CASE("q_power_inverse: explicit formulas and inverse law") {
  CHECK(q_power_inverse(5) == Mat2(-3, 5, 5, -8));
  CHECK(q_power_inverse(4) == Mat2(2, -3, -3, 5));
  for (int n = 1; n <= 64; ++n) {
    CAPTURE(n);
    CHECK(q_power(n) * q_power_inverse(n) == Mat2::identity());
  }
}

TEST_CASE("Cassini identity holds exactly for n up to 200") {
  for (int n = 2; n <= 200; ++n) {
    CAPTURE(n);
    CHECK(fib(n + 1) * fib(n - 1) - fib(n) * fib(n) ==
          (n % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("q_power semigroup") {
  for (int m = 1; m <= 12; ++m)
    for (int n = 1; n <= 12; ++n) CHECK(q_power(m) * q_power(n) == q_power(m + n));
}

TEST_CASE("approx_interval: endpoints, width, membership") {
  ApproxInterval iv = approx_interval(5);
  CHECK(iv.lower == Rational(8, 5));
  CHECK(iv.upper == Rational(5, 3));
  CHECK(iv.upper - iv.lower == Rational(1, 15));  // 1 / (F_5 * F_4)

  CodeParams p = CodeParams::make(5);
  CHECK(ratio_strictly_inside(18, 11, p));  // 1.6 < 18/11 < 5/3
  CHECK(ratio_in_closed(18, 11, p));
  CHECK(ratio_side(25, 11, p) == RatioSide::Above);
  CHECK(ratio_side(3, 2, p) == RatioSide::Below);
  CHECK(ratio_side(8, 5, p) == RatioSide::Inside);   // boundary, closed
  CHECK(ratio_side(5, 3, p) == RatioSide::Inside);   // boundary, closed
  CHECK_FALSE(ratio_strictly_inside(8, 5, p));
  CHECK(ratio_side(-18, -11, p) == RatioSide::Inside);  // sign normalized
  CHECK(ratio_side(1, 0, p) == RatioSide::Above);
  CHECK(ratio_side(-1, 0, p) == RatioSide::Below);
  CHECK(ratio_side(0, 0, p) == RatioSide::Undefined);

  CHECK_THROWS_AS(approx_interval(4), DomainError);
  CHECK_THROWS_AS(approx_interval(1), DomainError);
}

TEST_CASE("approx_interval: nested, shrinking, and never hits phi") {
  Rational prev_lo(0), prev_hi(1000);
  for (int n = 3; n <= 41; n += 2) {
    ApproxInterval iv = approx_interval(n);
    CHECK(iv.lower > prev_lo);
    CHECK(iv.upper < prev_hi);
    CHECK(iv.lower < iv.upper);
    // phi is the positive root of x^2 - x - 1; a rational endpoint never is.
    CHECK(iv.lower * iv.lower < iv.lower + 1);
    CHECK(iv.upper * iv.upper > iv.upper + 1);
    Rational width(1);
    width /= Rational(fib(n) * fib(n - 1));
    CHECK(iv.upper - iv.lower == width);
    prev_lo = iv.lower;
    prev_hi = iv.upper;
  }
}

TEST_CASE("binet_estimate matches the recurrence") {
  CHECK(binet_estimate(1) == 1);
  CHECK(binet_estimate(10) == 55);
  BigInt a = 0, b = 1;
  for (int n = 1; n <= 400; ++n) {
    BigInt next = a + b;
    a = b;
    b = next;
    // a is now F_n
    CAPTURE(n);
    CHECK(binet_estimate(n) == a);
  }
  CHECK(binet_estimate(1000) == fib(1000));
  CHECK_THROWS_AS(binet_estimate(0), DomainError);
}
