#include "fibcode/correction.hpp"

#include <algorithm>
#include <utility>

#include "fibcode/diophantine.hpp"
#include "fibcode/errors.hpp"

namespace fibcode {

namespace {

// Family members examined per scan before giving up; only reachable on
// adversarial inputs with huge orders.
constexpr long kScanBudget = 1 << 20;

struct Ctx {
  CodeParams p;
  BigInt target_det;  // (-1)^n * check
  MessageProfile profile = MessageProfile::Unrestricted;
};

Ctx make_ctx(const ReceivedMatrix& r, MessageProfile profile) {
  Ctx ctx;
  ctx.p = CodeParams::make(r.n);
  ctx.target_det = ctx.p.expected_det(r.check);
  ctx.profile = profile;
  return ctx;
}

void require_odd(const Ctx& ctx, const char* op) {
  if (!ctx.p.odd())
    throw DomainError(std::string(op) + ": correction requires an odd order");
}

// Full candidate verification: determinant law, both row ratios in [a, b],
// decoded entries in [1, F_{n-1}), minimality under MINIMAL, and re-encoding
// reproduces the candidate exactly.
std::optional<Mat2> verify_candidate(const Mat2& cand, const Ctx& ctx) {
  if (cand.det() != ctx.target_det) return std::nullopt;
  if (!ratio_in_closed(cand.cells[0], cand.cells[1], ctx.p)) return std::nullopt;
  if (!ratio_in_closed(cand.cells[2], cand.cells[3], ctx.p)) return std::nullopt;
  Mat2 m = decode_entries(cand, ctx.p.n);
  for (const auto& v : m.cells)
    if (v < 1 || v >= ctx.p.entry_bound()) return std::nullopt;
  if (ctx.profile == MessageProfile::Minimal && !is_minimal(m)) return std::nullopt;
  Codeword re = encode(MessageMatrix{m, ctx.p.n});
  if (re.c != cand) return std::nullopt;
  return m;
}

Codeword as_codeword(const Mat2& cells, const ReceivedMatrix& r) {
  return Codeword{cells, r.n, r.check};
}

CorrectionReport success_report(const ReceivedMatrix& r, const Ctx& ctx,
                                const Mat2& cells, const Mat2& message,
                                Diagnosis diag, Stage stage) {
  CorrectionReport rep;
  rep.diagnosis = std::move(diag);
  rep.recovered = as_codeword(cells, r);
  rep.message = MessageMatrix{message, ctx.p.n};
  rep.error = r.c - cells;
  rep.stage = stage;
  return rep;
}

CorrectionReport fail_report(std::string reason) {
  CorrectionReport rep;
  rep.diagnosis.kind = DiagnosisKind::Uncorrectable;
  rep.diagnosis.reason = std::move(reason);
  return rep;
}

CorrectionReport ambiguous_report(const ReceivedMatrix& r, std::string note,
                                  const std::vector<Mat2>& cands) {
  CorrectionReport rep;
  rep.diagnosis.kind = DiagnosisKind::Uncorrectable;
  rep.diagnosis.reason = "ambiguous: " + note;
  for (const auto& c : cands) rep.diagnosis.candidates.push_back(as_codeword(c, r));
  rep.ambiguity_note = std::move(note);
  return rep;
}

// One corrected row: which entry changed (0 when the row is kept as is)
// and the resulting pair.
struct RowRepair {
  int changed_pos = 0;  // absolute position 1..4
  BigInt left;
  BigInt right;
};

// Closed-form single-entry repairs for the row (u, v) at absolute positions
// (left_pos, left_pos + 1).  `trusted`: 0 = unknown (emit both one-sided
// repairs), 1 = left entry trusted, 2 = right entry trusted.
std::vector<RowRepair> row_repairs(const BigInt& u, const BigInt& v,
                                   int left_pos, int trusted, const Ctx& ctx) {
  std::vector<RowRepair> out;
  const BigInt& fm = ctx.p.f_nm1;
  const BigInt& fn = ctx.p.f_n;
  const BigInt& fp = ctx.p.f_np1;
  switch (ratio_side(u, v, ctx.p)) {
    case RatioSide::Inside:
      out.push_back(RowRepair{0, u, v});
      break;
    case RatioSide::Above: {
      if (trusted != 1) {  // right entry trusted, error on the left
        BigInt e = ceil_div(u * fm - v * fn, fm);  // ceil(u - v*b)
        out.push_back(RowRepair{left_pos, u - e, v});
      }
      if (trusted != 2) {  // left entry trusted, error on the right
        BigInt e = floor_div(v * fn - u * fm, fn);  // floor(v - u/b)
        out.push_back(RowRepair{left_pos + 1, u, v - e});
      }
      break;
    }
    case RatioSide::Below: {
      if (trusted != 1) {
        BigInt e = floor_div(u * fn - v * fp, fn);  // floor(u - v*a)
        out.push_back(RowRepair{left_pos, u - e, v});
      }
      if (trusted != 2) {
        BigInt e = ceil_div(v * fp - u * fn, fp);  // ceil(v - u/a)
        out.push_back(RowRepair{left_pos + 1, u, v - e});
      }
      break;
    }
    case RatioSide::Undefined:
      break;  // (0, 0) row: nothing to work with
  }
  return out;
}

// Verified member of a same-row solution family.
struct ScanSurvivor {
  Mat2 cells;
  Mat2 message;
};

struct ScanOutcome {
  bool solver_ran = false;
  bool budget_exceeded = false;
  std::vector<ScanSurvivor> survivors;  // in ascending family order
};

// Narrow a tau interval with A + B*tau in [lo, hi].
bool narrow(const BigInt& A, const BigInt& B, const BigInt& lo, const BigInt& hi,
            BigInt& tau_lo, BigInt& tau_hi, bool& bounded) {
  if (B == 0) return A >= lo && A <= hi;
  BigInt l, h;
  if (B > 0) {
    l = ceil_div(lo - A, B);
    h = floor_div(hi - A, B);
  } else {
    l = ceil_div(A - hi, -B);
    h = floor_div(A - lo, -B);
  }
  if (!bounded) {
    tau_lo = l;
    tau_hi = h;
    bounded = true;
  } else {
    tau_lo = std::max(tau_lo, l);
    tau_hi = std::min(tau_hi, h);
  }
  return true;
}

// Solve `row` of the received matrix against the (assumed correct) other
// row: row 1 from x*t4 - y*t3 = D, row 2 from t1*y - t2*x = D.  Scans the
// family in increasing order and keeps every member whose assembled matrix
// passes full verification.
ScanOutcome scan_same_row(int row,
                          const Mat2& trusted_cells, const Ctx& ctx,
                          int& dio_solves) {
  ScanOutcome out;
  const BigInt& t_left = row == 1 ? trusted_cells.cells[2] : trusted_cells.cells[0];
  const BigInt& t_right = row == 1 ? trusted_cells.cells[3] : trusted_cells.cells[1];

  // A candidate can only verify if the trusted row itself sits in [a, b].
  if (!ratio_in_closed(t_left, t_right, ctx.p)) return out;
  if (t_left == 0 && t_right == 0) return out;

  BigInt p_coeff, q_coeff;
  if (row == 1) {
    p_coeff = t_right;  // x*t4 - y*t3 = D with (x, y) = row-1 entries
    q_coeff = t_left;
  } else {
    p_coeff = -t_right;  // t1*y - t2*x = D with (x, y) = row-2 entries
    q_coeff = -t_left;
  }

  ++dio_solves;
  out.solver_ran = true;
  DiophantineFamily fam =
      solve_linear_diophantine(p_coeff, q_coeff, ctx.target_det);
  if (!fam.solvable) return out;

  // Decoded row entries are linear in the family parameter; both must lie in
  // [1, F_{n-1} - 1], which bounds the scan to a finite tau interval.
  const BigInt& fm = ctx.p.f_nm1;
  const BigInt& fn = ctx.p.f_n;
  const BigInt& fp = ctx.p.f_np1;
  BigInt a1 = -fm * fam.x0 + fn * fam.y0;      // first decoded entry at tau = 0
  BigInt b1 = -fm * fam.step_x + fn * fam.step_y;
  BigInt a2 = fn * fam.x0 - fp * fam.y0;       // second decoded entry at tau = 0
  BigInt b2 = fn * fam.step_x - fp * fam.step_y;

  BigInt lo = 1, hi = ctx.p.entry_bound() - 1;
  BigInt tau_lo, tau_hi;
  bool bounded = false;
  if (!narrow(a1, b1, lo, hi, tau_lo, tau_hi, bounded)) return out;
  if (!narrow(a2, b2, lo, hi, tau_lo, tau_hi, bounded)) return out;
  if (!bounded) return out;  // both steps decode to zero: cannot happen
  if (tau_lo > tau_hi) return out;

  if (tau_hi - tau_lo >= kScanBudget) {
    out.budget_exceeded = true;
    return out;
  }

  for (BigInt tau = tau_lo; tau <= tau_hi; ++tau) {
    BigInt x = fam.x0 + fam.step_x * tau;
    BigInt y = fam.y0 + fam.step_y * tau;
    Mat2 cand = trusted_cells;
    if (row == 1) {
      cand.cells[0] = x;
      cand.cells[1] = y;
    } else {
      cand.cells[2] = x;
      cand.cells[3] = y;
    }
    if (auto msg = verify_candidate(cand, ctx))
      out.survivors.push_back(ScanSurvivor{cand, *msg});
  }
  return out;
}

void dedupe(std::vector<ScanSurvivor>& v) {
  std::vector<ScanSurvivor> uniq;
  for (auto& s : v) {
    bool seen = false;
    for (const auto& u : uniq)
      if (u.cells == s.cells) {
        seen = true;
        break;
      }
    if (!seen) uniq.push_back(std::move(s));
  }
  v = std::move(uniq);
}

CorrectionReport same_row_verdict(const ReceivedMatrix& r, const Ctx& ctx,
                                  int row, const ScanOutcome& scan) {
  if (scan.budget_exceeded) {
    CorrectionReport rep = fail_report("solution family scan exceeded budget");
    rep.diophantine_solves = scan.solver_ran ? 1 : 0;
    return rep;
  }
  if (scan.survivors.empty()) {
    CorrectionReport rep =
        fail_report("no family member passes interval, bound and profile checks");
    rep.diophantine_solves = scan.solver_ran ? 1 : 0;
    return rep;
  }
  if (scan.survivors.size() > 1) {
    std::vector<Mat2> cands;
    for (const auto& s : scan.survivors) cands.push_back(s.cells);
    CorrectionReport rep = ambiguous_report(
        r, "multiple family members decode to valid messages", cands);
    rep.diophantine_solves = scan.solver_ran ? 1 : 0;
    return rep;
  }
  const ScanSurvivor& s = scan.survivors.front();
  Diagnosis diag;
  diag.kind = DiagnosisKind::DoubleSameRow;
  diag.row = row;
  for (int pos = 1; pos <= 4; ++pos)
    if (s.cells.at(pos) != r.c.at(pos)) diag.positions.push_back(pos);
  CorrectionReport rep =
      success_report(r, ctx, s.cells, s.message, std::move(diag),
                     Stage::SameRowDouble);
  rep.diophantine_solves = scan.solver_ran ? 1 : 0;
  return rep;
}

}  // namespace

const char* to_string(DiagnosisKind kind) {
  switch (kind) {
    case DiagnosisKind::NoError: return "NO_ERROR";
    case DiagnosisKind::Single: return "SINGLE";
    case DiagnosisKind::DoubleCross: return "DOUBLE_CROSS";
    case DiagnosisKind::DoubleSameRow: return "DOUBLE_SAME_ROW";
    case DiagnosisKind::Triple: return "TRIPLE";
    case DiagnosisKind::Uncorrectable: return "UNCORRECTABLE";
  }
  return "?";
}

const char* to_string(Stage stage) {
  switch (stage) {
    case Stage::None: return "none";
    case Stage::Clean: return "clean";
    case Stage::Single: return "single";
    case Stage::CrossDouble: return "cross_double";
    case Stage::SameRowDouble: return "same_row_double";
    case Stage::Triple: return "triple";
  }
  return "?";
}

std::string to_string(const Diagnosis& d) {
  std::string out = to_string(d.kind);
  if (d.kind == DiagnosisKind::Single && !d.positions.empty()) {
    out += "(c" + std::to_string(d.positions.front()) + ")";
  } else if (d.kind == DiagnosisKind::DoubleCross && !d.positions.empty()) {
    out += "(";
    for (std::size_t i = 0; i < d.positions.size(); ++i) {
      if (i) out += ",";
      out += "c" + std::to_string(d.positions[i]);
    }
    out += ")";
  } else if (d.kind == DiagnosisKind::DoubleSameRow) {
    out += "(row " + std::to_string(d.row) + ")";
  } else if (d.kind == DiagnosisKind::Uncorrectable && !d.reason.empty()) {
    out += " (" + d.reason + ")";
  }
  return out;
}

bool detect(const ReceivedMatrix& r) {
  CodeParams p = CodeParams::make(r.n);
  return r.c.det() == p.expected_det(r.check);
}

Classification classify(const ReceivedMatrix& r) {
  Ctx ctx = make_ctx(r, MessageProfile::Unrestricted);
  require_odd(ctx, "classify");
  Classification cls;
  cls.row1_inside = ratio_in_closed(r.c.cells[0], r.c.cells[1], ctx.p);
  cls.row2_inside = ratio_in_closed(r.c.cells[2], r.c.cells[3], ctx.p);
  return cls;
}

CorrectionReport correct_single(const ReceivedMatrix& r, MessageProfile profile) {
  Ctx ctx = make_ctx(r, profile);
  require_odd(ctx, "correct_single");
  const BigInt& c1 = r.c.cells[0];
  const BigInt& c2 = r.c.cells[1];
  const BigInt& c3 = r.c.cells[2];
  const BigInt& c4 = r.c.cells[3];
  const BigInt& d = ctx.target_det;

  // x_i numerator/denominator pairs, in position order.  On a clean codeword
  // c1*c4 - c2*c3 = d, so every quotient reduces to its own entry.
  const BigInt num14 = d + c2 * c3;   // x1 (den c4) and x4 (den c1)
  const BigInt num23 = c1 * c4 - d;   // x2 (den c3) and x3 (den c2)
  const std::pair<const BigInt*, const BigInt*> quot[4] = {
      {&num14, &c4}, {&num23, &c3}, {&num23, &c2}, {&num14, &c1}};

  struct Survivor {
    int pos;
    Mat2 cells;
    Mat2 message;
  };
  std::vector<Survivor> survivors;
  for (int pos = 1; pos <= 4; ++pos) {
    const BigInt& num = *quot[pos - 1].first;
    const BigInt& den = *quot[pos - 1].second;
    if (den == 0 || num % den != 0) continue;  // non-integral candidate
    Mat2 cand = r.c;
    cand.at(pos) = num / den;
    bool dup = false;
    for (const auto& s : survivors)
      if (s.cells == cand) dup = true;
    if (dup) continue;
    if (auto msg = verify_candidate(cand, ctx))
      survivors.push_back(Survivor{pos, cand, *msg});
  }

  if (survivors.size() != 1) {
    return fail_report(survivors.empty()
                           ? "no integral quotient survives verification"
                           : "multiple verified single-entry repairs");
  }
  Diagnosis diag;
  diag.kind = DiagnosisKind::Single;
  diag.positions = {survivors[0].pos};
  return success_report(r, ctx, survivors[0].cells, survivors[0].message,
                        std::move(diag), Stage::Single);
}

CorrectionReport correct_double_cross(const ReceivedMatrix& r,
                                      MessageProfile profile) {
  Ctx ctx = make_ctx(r, profile);
  require_odd(ctx, "correct_double_cross");

  std::vector<RowRepair> row1 =
      row_repairs(r.c.cells[0], r.c.cells[1], 1, 0, ctx);
  std::vector<RowRepair> row2 =
      row_repairs(r.c.cells[2], r.c.cells[3], 3, 0, ctx);

  struct Survivor {
    Mat2 cells;
    Mat2 message;
    std::vector<int> positions;
  };
  std::vector<Survivor> survivors;
  for (const auto& f1 : row1) {
    for (const auto& f2 : row2) {
      Mat2 cand(f1.left, f1.right, f2.left, f2.right);
      // The checking element is what disambiguates the in-row position.
      if (cand.det() != ctx.target_det) continue;
      bool dup = false;
      for (const auto& s : survivors)
        if (s.cells == cand) dup = true;
      if (dup) continue;
      if (auto msg = verify_candidate(cand, ctx)) {
        Survivor s{cand, *msg, {}};
        if (f1.changed_pos) s.positions.push_back(f1.changed_pos);
        if (f2.changed_pos) s.positions.push_back(f2.changed_pos);
        survivors.push_back(std::move(s));
      }
    }
  }

  if (survivors.empty())
    return fail_report("no candidate combination matches the checking element");
  if (survivors.size() > 1) {
    std::vector<Mat2> cands;
    for (const auto& s : survivors) cands.push_back(s.cells);
    return ambiguous_report(r, "both in-row positions satisfy all checks", cands);
  }
  Diagnosis diag;
  diag.kind = DiagnosisKind::DoubleCross;
  diag.positions = survivors[0].positions;
  return success_report(r, ctx, survivors[0].cells, survivors[0].message,
                        std::move(diag), Stage::CrossDouble);
}

CorrectionReport correct_double_same_row(const ReceivedMatrix& r, int row,
                                         MessageProfile profile) {
  if (row != 1 && row != 2)
    throw DomainError("correct_double_same_row: row must be 1 or 2");
  Ctx ctx = make_ctx(r, profile);
  require_odd(ctx, "correct_double_same_row");
  int dio = 0;
  ScanOutcome scan = scan_same_row(row, r.c, ctx, dio);
  return same_row_verdict(r, ctx, row, scan);
}

CorrectionReport correct_triple(const ReceivedMatrix& r, MessageProfile profile,
                                std::vector<TripleGuessTrace>* trace) {
  Ctx ctx = make_ctx(r, profile);
  require_odd(ctx, "correct_triple");
  int dio = 0;

  std::vector<ScanSurvivor> survivors;
  bool budget_exceeded = false;

  for (int guess = 1; guess <= 4; ++guess) {
    TripleGuessTrace g;
    g.guess = guess;
    const int row_of_guess = guess <= 2 ? 1 : 2;
    const int left_pos = row_of_guess == 1 ? 1 : 3;
    const int trusted_side = (guess == left_pos) ? 1 : 2;

    // Step 1: repair the partner entry in the guessed row.
    std::vector<RowRepair> fixes =
        row_repairs(r.c.at(left_pos), r.c.at(left_pos + 1), left_pos,
                    trusted_side, ctx);
    if (fixes.empty()) {
      if (trace) trace->push_back(g);
      continue;
    }
    g.applicable = true;
    const RowRepair& fix = fixes.front();

    // First check: a wrong guess usually throws the repaired ratio back out.
    if (!ratio_in_closed(fix.left, fix.right, ctx.p)) {
      if (trace) trace->push_back(g);
      continue;
    }
    g.first_check_passed = true;

    // Step 2: solve the other row against the repaired one.
    Mat2 assembled = r.c;
    assembled.at(left_pos) = fix.left;
    assembled.at(left_pos + 1) = fix.right;
    const int other_row = row_of_guess == 1 ? 2 : 1;
    ScanOutcome scan = scan_same_row(other_row, assembled, ctx, dio);
    budget_exceeded = budget_exceeded || scan.budget_exceeded;
    g.candidates = static_cast<int>(scan.survivors.size());
    for (auto& s : scan.survivors) survivors.push_back(std::move(s));
    if (trace) trace->push_back(g);
  }

  dedupe(survivors);

  CorrectionReport rep;
  if (survivors.size() == 1) {
    const ScanSurvivor& s = survivors.front();
    Diagnosis diag;
    diag.kind = DiagnosisKind::Triple;
    for (int pos = 1; pos <= 4; ++pos)
      if (s.cells.at(pos) != r.c.at(pos)) diag.positions.push_back(pos);
    rep = success_report(r, ctx, s.cells, s.message, std::move(diag),
                         Stage::Triple);
  } else if (survivors.empty()) {
    rep = fail_report(budget_exceeded
                          ? "solution family scan exceeded budget"
                          : "no guess yields a consistent repair");
  } else {
    std::vector<Mat2> cands;
    for (const auto& s : survivors) cands.push_back(s.cells);
    rep = ambiguous_report(r, "multiple guesses survive final verification",
                           cands);
  }
  rep.diophantine_solves = dio;
  return rep;
}

CorrectionReport correct(const ReceivedMatrix& r, MessageProfile profile) {
  CodeParams params = CodeParams::make(r.n);
  int dio_total = 0;

  // Clean determinant: decode and validate.  A det-consistent matrix whose
  // decode violates the message constraints falls through to the repair
  // stages (same-row shifts can preserve the determinant).
  if (detect(r)) {
    Mat2 m = decode_entries(r.c, r.n);
    ValidationResult v = validate_message(m, r.n, profile);
    if (v.ok) {
      CorrectionReport rep;
      rep.diagnosis.kind = DiagnosisKind::NoError;
      rep.recovered = Codeword{r.c, r.n, r.check};
      rep.message = MessageMatrix{m, r.n};
      rep.error = Mat2(0, 0, 0, 0);
      rep.stage = Stage::Clean;
      return rep;
    }
  }

  if (!params.odd()) {
    CorrectionReport rep =
        fail_report("errors present and correction requires an odd order");
    return rep;
  }

  // Stage 2: single-entry repair from the quotient test.
  CorrectionReport single = correct_single(r, profile);
  if (single.success()) return single;

  Classification cls = classify(r);

  auto finish = [&](CorrectionReport rep) {
    rep.diophantine_solves += dio_total;
    return rep;
  };

  if (!cls.row1_inside && !cls.row2_inside) {
    // Both rows suspect: try the closed-form cross repair first.
    CorrectionReport cross = correct_double_cross(r, profile);
    if (cross.success() || !cross.diagnosis.candidates.empty())
      return finish(std::move(cross));
  } else {
    // At least one row ratio is inside [a, b]: treat it as trusted and solve
    // the other row (both, when both are inside).
    Ctx ctx = make_ctx(r, profile);
    std::vector<ScanSurvivor> survivors;
    bool budget = false;
    bool solver = false;
    for (int row = 1; row <= 2; ++row) {
      const bool other_inside = row == 1 ? cls.row2_inside : cls.row1_inside;
      if (!other_inside) continue;
      ScanOutcome scan = scan_same_row(row, r.c, ctx, dio_total);
      solver = solver || scan.solver_ran;
      budget = budget || scan.budget_exceeded;
      for (auto& s : scan.survivors) survivors.push_back(std::move(s));
    }
    dedupe(survivors);
    if (survivors.size() == 1) {
      const ScanSurvivor& s = survivors.front();
      Diagnosis diag;
      diag.kind = DiagnosisKind::DoubleSameRow;
      diag.row = (s.cells.cells[0] != r.c.cells[0] ||
                  s.cells.cells[1] != r.c.cells[1])
                     ? 1
                     : 2;
      for (int pos = 1; pos <= 4; ++pos)
        if (s.cells.at(pos) != r.c.at(pos)) diag.positions.push_back(pos);
      CorrectionReport rep = success_report(r, ctx, s.cells, s.message,
                                            std::move(diag),
                                            Stage::SameRowDouble);
      return finish(std::move(rep));
    }
    if (survivors.size() > 1) {
      std::vector<Mat2> cands;
      for (const auto& s : survivors) cands.push_back(s.cells);
      return finish(ambiguous_report(
          r, "multiple family members decode to valid messages", cands));
    }
    if (budget)
      return finish(fail_report("solution family scan exceeded budget"));
  }

  // Last resort: trial-and-error triple correction.
  CorrectionReport triple = correct_triple(r, profile);
  return finish(std::move(triple));
}

}  // namespace fibcode
