#pragma once

#include <array>
#include <string>

#include "fibcode/bigint.hpp"

namespace fibcode {

// 2x2 integer matrix, row major. Positions 1..4 address c1 c2 / c3 c4;
// messages, codewords and error matrices all share this shape.
struct Mat2 {
  std::array<BigInt, 4> cells{};

  Mat2() = default;
  Mat2(BigInt c1, BigInt c2, BigInt c3, BigInt c4)
      : cells{std::move(c1), std::move(c2), std::move(c3), std::move(c4)} {}

  static Mat2 identity() { return Mat2(1, 0, 0, 1); }

  const BigInt& at(int pos) const;  // pos in 1..4
  BigInt& at(int pos);

  BigInt det() const { return cells[0] * cells[3] - cells[1] * cells[2]; }

  Mat2 operator*(const Mat2& o) const;
  Mat2 operator+(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  bool operator==(const Mat2& o) const { return cells == o.cells; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }

  bool is_zero() const;
  std::string str() const;  // "c1,c2,c3,c4"
};

}  // namespace fibcode
