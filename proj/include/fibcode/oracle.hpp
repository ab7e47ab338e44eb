#pragma once

#include <vector>

#include "fibcode/codec.hpp"
#include "fibcode/correction.hpp"

namespace fibcode {

struct OracleCandidate {
  MessageMatrix message;
  Codeword codeword;
  int distance = 0;  // number of entries differing from the received matrix
};

struct OracleResult {
  // Every minimum-distance candidate, ordered by (m1, m2, m3, m4).
  std::vector<OracleCandidate> candidates;
  int min_distance = 5;  // 5 = no candidate exists for this check value
};

// Brute-force reference decoder: enumerates every valid message under the
// profile, keeps those whose determinant equals the received check, and
// returns all codewords at minimum entry distance from the received matrix.
// Throws OracleSpaceError when the message space exceeds the budget
// (roughly n > 11).
OracleResult oracle_correct(const ReceivedMatrix& r, MessageProfile profile);

}  // namespace fibcode
