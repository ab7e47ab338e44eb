#include "fibcode/codec.hpp"

#include "fibcode/errors.hpp"

namespace fibcode {

const char* to_string(MessageProfile profile) {
  return profile == MessageProfile::Minimal ? "minimal" : "unrestricted";
}

bool is_minimal(const Mat2& m) {
  const BigInt& m1 = m.cells[0];
  const BigInt& m2 = m.cells[1];
  const BigInt& m3 = m.cells[2];
  const BigInt& m4 = m.cells[3];
  return (m1 >= m3 && m2 <= m4) || (m1 <= m3 && m2 >= m4);
}

ValidationResult validate_message(const Mat2& m, int n, MessageProfile profile) {
  ValidationResult res;
  if (n < 2) {
    res.ok = false;
    res.violations.push_back("order n must be >= 2");
    return res;
  }
  CodeParams p = CodeParams::make(n);
  for (int pos = 1; pos <= 4; ++pos) {
    const BigInt& v = m.at(pos);
    if (v < 1) {
      res.ok = false;
      res.violations.push_back("m" + std::to_string(pos) + " = " + v.str() +
                               " is not a positive integer");
    } else if (v >= p.entry_bound()) {
      res.ok = false;
      res.violations.push_back("m" + std::to_string(pos) + " = " + v.str() +
                               " not < F_{n-1} = " + p.entry_bound().str());
    }
  }
  if (profile == MessageProfile::Minimal && !is_minimal(m)) {
    res.ok = false;
    res.violations.push_back("matrix is not minimal");
  }
  return res;
}

Codeword encode(const MessageMatrix& msg, MessageProfile profile) {
  ValidationResult v = validate_message(msg.m, msg.n, profile);
  if (!v.ok) throw ValidationError("encode: invalid message", v.violations);
  CodeParams p = CodeParams::make(msg.n);
  const BigInt& m1 = msg.m.cells[0];
  const BigInt& m2 = msg.m.cells[1];
  const BigInt& m3 = msg.m.cells[2];
  const BigInt& m4 = msg.m.cells[3];
  Codeword cw;
  cw.n = msg.n;
  cw.c = Mat2(p.f_np1 * m1 + p.f_n * m2, p.f_n * m1 + p.f_nm1 * m2,
              p.f_np1 * m3 + p.f_n * m4, p.f_n * m3 + p.f_nm1 * m4);
  cw.check = msg.m.det();
  return cw;
}

Mat2 decode_entries(const Mat2& c, int n) {
  if (n < 2) throw DomainError("decode: order must be >= 2");
  return c * q_power_inverse(n);
}

MessageMatrix decode(const Codeword& cw) {
  Mat2 m = decode_entries(cw.c, cw.n);
  ValidationResult v = validate_message(m, cw.n, MessageProfile::Unrestricted);
  if (!v.ok) {
    std::string detail = "decode: entries violate message constraints:";
    for (const auto& s : v.violations) detail += " " + s + ";";
    throw CorruptionError(detail);
  }
  return MessageMatrix{m, cw.n};
}

MessageMatrix pack_message(const std::string& bits, int n) {
  const std::size_t k = bits.size();
  if (k == 0 || k % 4 != 0)
    throw ParameterError("pack_message: bit length must be a positive multiple of 4");
  for (char ch : bits)
    if (ch != '0' && ch != '1')
      throw ParameterError("pack_message: bit string may contain only 0 and 1");
  const std::size_t h = k / 4;
  if (h > 4096) throw ParameterError("pack_message: block size too large");

  BigInt block_cap = BigInt(1) << h;  // blocks are in [0, 2^h)
  BigInt bound = message_entry_bound(n);
  if (block_cap >= bound) {
    // Name the smallest odd order that admits h-bit blocks.
    int cand = 3;
    while (message_entry_bound(cand) <= block_cap) cand += 2;
    throw ParameterError("pack_message: 2^" + std::to_string(h) +
                         " >= F_{n-1} = " + bound.str() +
                         "; smallest admissible odd order is n = " +
                         std::to_string(cand));
  }

  Mat2 m;
  for (int i = 0; i < 4; ++i) {
    BigInt value = 0;
    for (std::size_t j = 0; j < h; ++j) {
      value <<= 1;
      if (bits[static_cast<std::size_t>(i) * h + j] == '1') value |= 1;
    }
    m.cells[static_cast<std::size_t>(i)] = value + 1;
  }
  return MessageMatrix{m, n};
}

std::string unpack_message(const MessageMatrix& msg, int block_bits) {
  if (block_bits < 1) throw ParameterError("unpack_message: block size must be >= 1");
  const std::size_t h = static_cast<std::size_t>(block_bits);
  BigInt block_cap = BigInt(1) << h;
  std::string bits;
  bits.reserve(4 * h);
  for (int i = 0; i < 4; ++i) {
    BigInt value = msg.m.cells[static_cast<std::size_t>(i)] - 1;
    if (value < 0 || value >= block_cap)
      throw ParameterError("unpack_message: entry m" + std::to_string(i + 1) +
                           " does not fit an " + std::to_string(h) + "-bit block");
    for (std::size_t j = 0; j < h; ++j) {
      bits += boost::multiprecision::bit_test(value, static_cast<unsigned>(h - 1 - j))
                  ? '1'
                  : '0';
    }
  }
  return bits;
}

BigInt message_entry_bound(int n) {
  if (n < 2) throw DomainError("message_entry_bound: order must be >= 2");
  return fib(n - 1);
}

}  // namespace fibcode
