#include "fibcode/wire.hpp"

#include <zlib.h>

#include <cstring>

namespace fibcode {

namespace {

constexpr std::uint8_t kMagic[4] = {'F', 'I', 'B', 'C'};
constexpr std::uint8_t kVersion = 0x01;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_field(std::vector<std::uint8_t>& out, const BigInt& v) {
  if (v == 0) {
    out.push_back(0x00);
    put_u32(out, 0);
    return;
  }
  out.push_back(v > 0 ? 0x01 : 0x02);
  BigInt mag = v > 0 ? v : BigInt(-v);
  std::vector<std::uint8_t> bytes;
  boost::multiprecision::export_bits(mag, std::back_inserter(bytes), 8);
  put_u32(out, static_cast<std::uint32_t>(bytes.size()));
  out.insert(out.end(), bytes.begin(), bytes.end());
}

std::uint32_t crc_of(const std::uint8_t* data, std::size_t len) {
  return static_cast<std::uint32_t>(
      ::crc32(0UL, reinterpret_cast<const Bytef*>(data),
              static_cast<uInt>(len)));
}

struct Reader {
  const std::vector<std::uint8_t>& bytes;
  std::size_t pos = 0;

  std::uint8_t u8() {
    if (pos + 1 > bytes.size()) throw TruncationError("wire: truncated stream");
    return bytes[pos++];
  }
  std::uint16_t u16() {
    std::uint16_t hi = u8();
    return static_cast<std::uint16_t>((hi << 8) | u8());
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | u8();
    return v;
  }
  BigInt field() {
    std::uint8_t sign = u8();
    if (sign > 0x02) throw FieldError("wire: invalid sign byte");
    std::uint32_t len = u32();
    if (sign == 0x00) {
      if (len != 0) throw FieldError("wire: zero field with nonzero length");
      return BigInt(0);
    }
    if (len == 0) throw FieldError("wire: empty magnitude");
    if (pos + len > bytes.size()) throw TruncationError("wire: truncated stream");
    if (bytes[pos] == 0) throw FieldError("wire: non-canonical leading zero");
    BigInt mag;
    boost::multiprecision::import_bits(mag, bytes.begin() + static_cast<long>(pos),
                                       bytes.begin() + static_cast<long>(pos + len),
                                       8);
    pos += len;
    return sign == 0x02 ? BigInt(-mag) : mag;
  }
};

}  // namespace

std::vector<std::uint8_t> serialize(const Codeword& cw, std::uint32_t k) {
  if (cw.n < 1 || cw.n > 0xFFFF)
    throw ParameterError("wire: order must fit 16 bits");
  std::vector<std::uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  put_u16(out, static_cast<std::uint16_t>(cw.n));
  put_u32(out, k);
  for (int pos = 1; pos <= 4; ++pos) put_field(out, cw.c.at(pos));
  put_field(out, cw.check);
  put_u32(out, crc_of(out.data(), out.size()));
  return out;
}

WireCodeword deserialize(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 4) throw TruncationError("wire: truncated stream");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw BadMagicError("wire: bad magic");
  if (bytes.size() < 5) throw TruncationError("wire: truncated stream");
  if (bytes[4] != kVersion) throw VersionError("wire: unsupported version");
  // Payload must at least hold the header and the trailing CRC.
  if (bytes.size() < 4 + 1 + 2 + 4 + 4) throw TruncationError("wire: truncated stream");

  const std::size_t crc_pos = bytes.size() - 4;
  std::uint32_t stored = (std::uint32_t(bytes[crc_pos]) << 24) |
                         (std::uint32_t(bytes[crc_pos + 1]) << 16) |
                         (std::uint32_t(bytes[crc_pos + 2]) << 8) |
                         std::uint32_t(bytes[crc_pos + 3]);
  if (crc_of(bytes.data(), crc_pos) != stored)
    throw CrcError("wire: CRC mismatch");

  Reader rd{bytes, 5};
  WireCodeword wc;
  wc.codeword.n = rd.u16();
  wc.k = rd.u32();
  for (int pos = 1; pos <= 4; ++pos) wc.codeword.c.at(pos) = rd.field();
  wc.codeword.check = rd.field();
  if (rd.pos != crc_pos) throw FieldError("wire: trailing bytes");
  return wc;
}

}  // namespace fibcode
