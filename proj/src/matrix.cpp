#include "fibcode/matrix.hpp"

#include "fibcode/errors.hpp"

namespace fibcode {

const BigInt& Mat2::at(int pos) const {
  if (pos < 1 || pos > 4) throw DomainError("matrix position must be 1..4");
  return cells[static_cast<std::size_t>(pos - 1)];
}

BigInt& Mat2::at(int pos) {
  if (pos < 1 || pos > 4) throw DomainError("matrix position must be 1..4");
  return cells[static_cast<std::size_t>(pos - 1)];
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2(cells[0] * o.cells[0] + cells[1] * o.cells[2],
              cells[0] * o.cells[1] + cells[1] * o.cells[3],
              cells[2] * o.cells[0] + cells[3] * o.cells[2],
              cells[2] * o.cells[1] + cells[3] * o.cells[3]);
}

Mat2 Mat2::operator+(const Mat2& o) const {
  return Mat2(cells[0] + o.cells[0], cells[1] + o.cells[1],
              cells[2] + o.cells[2], cells[3] + o.cells[3]);
}

Mat2 Mat2::operator-(const Mat2& o) const {
  return Mat2(cells[0] - o.cells[0], cells[1] - o.cells[1],
              cells[2] - o.cells[2], cells[3] - o.cells[3]);
}

bool Mat2::is_zero() const {
  for (const auto& c : cells)
    if (c != 0) return false;
  return true;
}

std::string Mat2::str() const {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out += ',';
    out += cells[i].str();
  }
  return out;
}

}  // namespace fibcode
