#pragma once

#include "fibcode/bigint.hpp"

namespace fibcode {

struct RedundancyFigures {
  int n = 0;
  int k = 0;
  long long l_formula = 0;       // floor((4n+2)log2(phi) - 2log2(5) + 3k/2 + 5)
  long long l_exact = 0;         // bits of the maximal codeword + 2h+1 check bits
  long long redundancy_formula = 0;  // l_formula - k
  double redundancy_approx = 0;      // 2.8n + 0.5k
};

// Closed-form codeword bit length for order n and k = 4h message bits.
// The golden-ratio constants are evaluated at 128 fractional bits from the
// integer square root of 5, never from hard-coded floats, so the result is
// identical on every platform.  Throws ParameterError for inadmissible
// (n, k): n odd >= 3, k a positive multiple of 4.
long long codeword_bits(int n, int k);

RedundancyFigures redundancy(int n, int k);

// Q128 fixed-point constants, exposed for tests.
const BigInt& log2_phi_q128();
const BigInt& log2_five_q128();

}  // namespace fibcode
