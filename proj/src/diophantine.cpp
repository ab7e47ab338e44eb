#include "fibcode/diophantine.hpp"

#include <utility>

#include "fibcode/errors.hpp"

namespace fibcode {

void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s,
                  BigInt& t) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s_cur = 0;
  BigInt old_t = 0, t_cur = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::exchange(r, std::move(tmp));
    tmp = old_s - q * s_cur;
    old_s = std::exchange(s_cur, std::move(tmp));
    tmp = old_t - q * t_cur;
    old_t = std::exchange(t_cur, std::move(tmp));
  }
  g = std::move(old_r);
  s = std::move(old_s);
  t = std::move(old_t);
}

DiophantineFamily solve_linear_diophantine(const BigInt& p, const BigInt& q,
                                           const BigInt& r) {
  if (p == 0 && q == 0)
    throw DomainError("solve_linear_diophantine: p and q must not both be zero");

  BigInt ap = p < 0 ? BigInt(-p) : p;
  BigInt aq = q < 0 ? BigInt(-q) : q;
  BigInt g, s, t;
  extended_gcd(ap, aq, g, s, t);

  DiophantineFamily fam;
  if (r % g != 0) return fam;  // unsolvable; signals an inconsistent hypothesis

  BigInt scale = r / g;
  // p*x + q*(-y) = r: lift the |p|,|q| identity back to the signed inputs.
  fam.x0 = (p < 0 ? -s : s) * scale;
  fam.y0 = -((q < 0 ? -t : t) * scale);
  fam.step_x = q / g;
  fam.step_y = p / g;
  if (fam.step_x < 0 || (fam.step_x == 0 && fam.step_y < 0)) {
    fam.step_x = -fam.step_x;
    fam.step_y = -fam.step_y;
  }
  fam.solvable = true;
  return fam;
}

}  // namespace fibcode
