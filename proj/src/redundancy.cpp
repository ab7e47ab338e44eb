#include "fibcode/redundancy.hpp"

#include "fibcode/errors.hpp"
#include "fibcode/fibonacci.hpp"

namespace fibcode {

namespace {

constexpr unsigned kOutBits = 128;
constexpr unsigned kWorkBits = 320;

// log2 of a fixed-point value in [1, 2), by repeated squaring; returns the
// fractional part with kOutBits bits.  Working precision leaves ~190 guard
// bits, far more than the extraction consumes.
BigInt fixed_log2_fraction(BigInt x) {
  BigInt result = 0;
  const BigInt two = BigInt(2) << kWorkBits;
  for (unsigned i = 0; i < kOutBits; ++i) {
    x = (x * x) >> kWorkBits;
    result <<= 1;
    if (x >= two) {
      x >>= 1;
      result |= 1;
    }
  }
  return result;
}

BigInt compute_log2_phi() {
  const BigInt one = BigInt(1) << kWorkBits;
  const BigInt sqrt5 = boost::multiprecision::sqrt(BigInt(5) << (2 * kWorkBits));
  const BigInt phi = (one + sqrt5) >> 1;  // in [1, 2)
  return fixed_log2_fraction(phi);
}

BigInt compute_log2_five() {
  // log2(5) = 2 + log2(5/4), and 5/4 lies in [1, 2).
  const BigInt five_fourths = BigInt(5) << (kWorkBits - 2);
  return (BigInt(2) << kOutBits) + fixed_log2_fraction(five_fourths);
}

void check_admissible(int n, int k) {
  if (n < 3 || n % 2 == 0)
    throw ParameterError("redundancy: order must be odd and >= 3");
  if (k < 4 || k % 4 != 0)
    throw ParameterError("redundancy: k must be a positive multiple of 4");
  if (k / 4 > 4096) throw ParameterError("redundancy: block size too large");
}

}  // namespace

const BigInt& log2_phi_q128() {
  static const BigInt value = compute_log2_phi();
  return value;
}

const BigInt& log2_five_q128() {
  static const BigInt value = compute_log2_five();
  return value;
}

long long codeword_bits(int n, int k) {
  check_admissible(n, k);
  // (4n+2)*log2(phi) - 2*log2(5) + 3k/2 + 5, all in Q128; k = 4h makes the
  // 3k/2 term integral.
  BigInt x = BigInt(4 * n + 2) * log2_phi_q128();
  x -= 2 * log2_five_q128();
  x += BigInt(3 * (k / 2) + 5) << kOutBits;
  if (x < 0) throw ParameterError("redundancy: expression underflow");
  return BigInt(x >> kOutBits).convert_to<long long>();
}

RedundancyFigures redundancy(int n, int k) {
  check_admissible(n, k);
  RedundancyFigures fig;
  fig.n = n;
  fig.k = k;
  fig.l_formula = codeword_bits(n, k);

  // Exact route: message entries are h-bit blocks plus one, so they top out
  // at 2^h.  The codeword length is the bit length of the whole four-field
  // tuple space, plus 2h + 1 bits for the signed determinant.
  const int h = k / 4;
  const BigInt max_entry = BigInt(1) << h;
  const BigInt c_left = (fib(n + 1) + fib(n)) * max_entry;  // c1, c3 maximum
  const BigInt c_right = fib(n + 1) * max_entry;            // c2, c4 maximum
  BigInt tuples = (c_left + 1) * (c_right + 1);
  tuples *= tuples;
  fig.l_exact = bit_length(tuples - 1) + 2 * h + 1;

  fig.redundancy_formula = fig.l_formula - k;
  fig.redundancy_approx = 2.8 * n + 0.5 * k;
  return fig;
}

}  // namespace fibcode
