#include <cmath>

#include "doctest.h"
#include "fibcode/errors.hpp"
#include "fibcode/fibonacci.hpp"
#include "fibcode/redundancy.hpp"

using namespace fibcode;

TEST_CASE("fixed-point constants match the reference digits") {
  Rational phi_frac(log2_phi_q128(), BigInt(1) << 128);
  Rational five_frac(log2_five_q128(), BigInt(1) << 128);
  CHECK(std::abs(phi_frac.convert_to<double>() - 0.694241913630617301) < 1e-15);
  CHECK(std::abs(five_frac.convert_to<double>() / 2 - 1.160964047443681173) <
        1e-15);
}

TEST_CASE("codeword_bits: worked example n=5, k=8") {
  // floor(22*log2(phi) - 2*log2(5) + 12 + 5) = floor(27.629...) = 27
  CHECK(codeword_bits(5, 8) == 27);
}

TEST_CASE("redundancy figures for n=5, k=8") {
  RedundancyFigures fig = redundancy(5, 8);
  CHECK(fig.l_formula == 27);
  // The four-field tuple space needs 22 bits, plus 2h+1 = 5 check bits.
  CHECK(fig.l_exact == 27);
  CHECK(fig.redundancy_formula == 19);
  CHECK(fig.redundancy_approx == doctest::Approx(18.0));
  // l is approximated by 2.8n + 1.5k = 26, within 2 bits of the formula.
  CHECK(std::abs(2.8 * 5 + 1.5 * 8 - double(fig.l_formula)) <= 2.0);
}

TEST_CASE("redundancy: the two routes agree across a small grid") {
  for (int n = 3; n <= 21; n += 2) {
    for (int h = 1; h <= 4; ++h) {
      int k = 4 * h;
      RedundancyFigures fig = redundancy(n, k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(std::abs(fig.l_formula - fig.l_exact) <= 2);
      CHECK(std::abs(double(fig.redundancy_formula) - fig.redundancy_approx) <=
            3.0);
    }
  }
  // The smallest order runs through both routes as well.
  RedundancyFigures tiny = redundancy(3, 4);
  CHECK(std::abs(tiny.l_formula - tiny.l_exact) <= 2);
}

TEST_CASE("redundancy: parameter validation") {
  CHECK_THROWS_AS(redundancy(5, 0), ParameterError);  // empty message
  CHECK_THROWS_AS(redundancy(5, 6), ParameterError);  // k not 4h
  CHECK_THROWS_AS(redundancy(6, 8), ParameterError);  // even order
  CHECK_THROWS_AS(redundancy(1, 4), ParameterError);
  CHECK_THROWS_AS(codeword_bits(5, 7), ParameterError);
}
