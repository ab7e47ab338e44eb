#pragma once

#include <string>
#include <vector>

#include "fibcode/fibonacci.hpp"
#include "fibcode/matrix.hpp"

namespace fibcode {

// MINIMAL additionally requires is_minimal() at encode time; it is the
// message space on which same-row double-error correction is unambiguous.
enum class MessageProfile { Unrestricted, Minimal };

const char* to_string(MessageProfile profile);

struct MessageMatrix {
  Mat2 m;
  int n = 0;
  bool operator==(const MessageMatrix& o) const { return m == o.m && n == o.n; }
};

// Encoded matrix plus the checking element det M that travels with it.
struct Codeword {
  Mat2 c;
  int n = 0;
  BigInt check;
  bool operator==(const Codeword& o) const {
    return c == o.c && n == o.n && check == o.check;
  }
};

struct ValidationResult {
  bool ok = true;
  std::vector<std::string> violations;
};

// (m1 >= m3 and m2 <= m4) or (m1 <= m3 and m2 >= m4).  Minimal matrices
// exclude the row-shift ambiguity in same-row correction.
bool is_minimal(const Mat2& m);

// Accepts iff 1 <= m_i < F_{n-1} for all entries, plus minimality under the
// MINIMAL profile. The verdict lists every violated constraint.
ValidationResult validate_message(const Mat2& m, int n, MessageProfile profile);

// C = M * Q^n with check = det M.  Throws ValidationError on an invalid
// message. Works for any n >= 2, even or odd.
Codeword encode(const MessageMatrix& msg,
                MessageProfile profile = MessageProfile::Unrestricted);

// Exact inverse map: returns C * Q^{-n} with no validation.
Mat2 decode_entries(const Mat2& c, int n);

// Decode with bound checks; throws CorruptionError when the decoded entries
// leave [1, F_{n-1}) (which proves the input was not a clean codeword).
MessageMatrix decode(const Codeword& cw);

// Bitstream packing: k bits ("0"/"1" string, k = 4h) split into four h-bit
// big-endian blocks, m_i = block_i + 1.  Requires 2^h < F_{n-1}; the error
// message names the smallest admissible odd order otherwise.
MessageMatrix pack_message(const std::string& bits, int n);

// Inverse of pack_message for a given block width h.
std::string unpack_message(const MessageMatrix& msg, int block_bits);

// F_{n-1}: message entries lie in [1, bound).
BigInt message_entry_bound(int n);

}  // namespace fibcode
