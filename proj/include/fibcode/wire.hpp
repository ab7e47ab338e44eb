#pragma once

#include <cstdint>
#include <vector>

#include "fibcode/codec.hpp"
#include "fibcode/errors.hpp"

namespace fibcode {

// Binary container, one codeword per file:
//   "FIBC" | version 0x01 | n (BE16) | k (BE32) |
//   5 integer fields c1..c4, check, each encoded as
//     sign byte (0x00 zero / 0x01 positive / 0x02 negative) |
//     magnitude length (BE32) | magnitude bytes (big endian, no leading zero)
//   | CRC-32 of all prior bytes (BE32)
// Round trips are bit exact; k is 0 unless the codeword came from a
// bitstream message.

struct WireError : Error {
  using Error::Error;
};
struct BadMagicError : WireError {
  using WireError::WireError;
};
struct VersionError : WireError {
  using WireError::WireError;
};
struct CrcError : WireError {
  using WireError::WireError;
};
struct TruncationError : WireError {
  using WireError::WireError;
};
struct FieldError : WireError {
  using WireError::WireError;
};

struct WireCodeword {
  Codeword codeword;
  std::uint32_t k = 0;  // bitstream length, 0 when matrix-direct
};

std::vector<std::uint8_t> serialize(const Codeword& cw, std::uint32_t k = 0);
WireCodeword deserialize(const std::vector<std::uint8_t>& bytes);

}  // namespace fibcode
