#include "fibcode/oracle.hpp"

#include "fibcode/errors.hpp"

namespace fibcode {

namespace {

constexpr long long kSpaceBudget = 100'000'000;

}  // namespace

OracleResult oracle_correct(const ReceivedMatrix& r, MessageProfile profile) {
  CodeParams p = CodeParams::make(r.n);
  BigInt bound = p.entry_bound();
  BigInt values = bound - 1;  // entries in [1, F_{n-1})
  if (values < 1) throw OracleSpaceError("oracle: empty message space");
  BigInt space = values * values * values * values;
  if (space > kSpaceBudget)
    throw OracleSpaceError("oracle: message space has " + space.str() +
                           " elements, budget is " +
                           std::to_string(kSpaceBudget));

  const long long top = values.convert_to<long long>();
  OracleResult out;

  Mat2 m;
  for (long long m1 = 1; m1 <= top; ++m1) {
    m.cells[0] = m1;
    for (long long m2 = 1; m2 <= top; ++m2) {
      m.cells[1] = m2;
      for (long long m3 = 1; m3 <= top; ++m3) {
        m.cells[2] = m3;
        for (long long m4 = 1; m4 <= top; ++m4) {
          m.cells[3] = m4;
          if (m.det() != r.check) continue;  // determinant filter first
          if (profile == MessageProfile::Minimal && !is_minimal(m)) continue;
          Mat2 c(p.f_np1 * m.cells[0] + p.f_n * m.cells[1],
                 p.f_n * m.cells[0] + p.f_nm1 * m.cells[1],
                 p.f_np1 * m.cells[2] + p.f_n * m.cells[3],
                 p.f_n * m.cells[2] + p.f_nm1 * m.cells[3]);
          int dist = 0;
          for (int i = 0; i < 4; ++i)
            if (c.cells[static_cast<std::size_t>(i)] !=
                r.c.cells[static_cast<std::size_t>(i)])
              ++dist;
          if (dist > out.min_distance) continue;
          if (dist < out.min_distance) {
            out.min_distance = dist;
            out.candidates.clear();
          }
          out.candidates.push_back(
              OracleCandidate{MessageMatrix{m, r.n}, Codeword{c, r.n, r.check},
                              dist});
        }
      }
    }
  }
  return out;
}

}  // namespace fibcode
