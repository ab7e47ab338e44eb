#include "doctest.h"
#include "fibcode/correction.hpp"
#include "fibcode/errors.hpp"

using namespace fibcode;

namespace {

ReceivedMatrix rx(Mat2 c, int n, BigInt check) {
  return ReceivedMatrix{std::move(c), n, std::move(check)};
}

const MessageProfile kMin = MessageProfile::Minimal;

}  // namespace

TEST_CASE("detect") {
  CHECK(detect(rx(Mat2(18, 11, 21, 13), 5, -3)));
  CHECK_FALSE(detect(rx(Mat2(20, 11, 21, 13), 5, -3)));  // det 29
  // Degenerate pass: determinant consistent, decode constraints flag it.
  CHECK(detect(rx(Mat2(0, 0, 0, 0), 5, 0)));
}

TEST_CASE("classify: the ratio decision table") {
  Classification c = classify(rx(Mat2(18, 11, 25, 17), 5, -3));
  CHECK(c.row1_inside);
  CHECK_FALSE(c.row2_inside);  // 25/17 < 8/5

  c = classify(rx(Mat2(25, 11, 25, 13), 5, -3));
  CHECK_FALSE(c.row1_inside);
  CHECK_FALSE(c.row2_inside);

  CHECK_THROWS_AS(classify(rx(Mat2(1, 1, 1, 1), 6, 0)), DomainError);
}

TEST_CASE("correct_single: quotient repair") {
  // x1 = 234/13 = 18 is the only integral, verifying quotient.
  CorrectionReport rep = correct_single(rx(Mat2(20, 11, 21, 13), 5, -3), kMin);
  REQUIRE(rep.success());
  CHECK(rep.diagnosis.kind == DiagnosisKind::Single);
  CHECK(rep.diagnosis.positions == std::vector<int>{1});
  CHECK(rep.recovered->c == Mat2(18, 11, 21, 13));
  CHECK(rep.message->m == Mat2(1, 2, 2, 1));
  CHECK(*rep.error == Mat2(2, 0, 0, 0));

  // On a clean codeword all four quotients are integral and equal the
  // current entries; the "repair" is the identity.
  rep = correct_single(rx(Mat2(18, 11, 21, 13), 5, -3), kMin);
  REQUIRE(rep.success());
  CHECK(rep.recovered->c == Mat2(18, 11, 21, 13));
  CHECK(rep.error->is_zero());

  // Double error: no quotient survives, the stage defers.
  rep = correct_single(rx(Mat2(25, 11, 25, 13), 5, -3), kMin);
  CHECK_FALSE(rep.success());
}

TEST_CASE("correct_single survives divisor coincidences") {
  // c1 -> 6 makes x4 = 234/6 = 39 integral too, but position 4's candidate
  // fails the interval check; the true repair is still unique.
  CorrectionReport rep = correct_single(rx(Mat2(6, 11, 21, 13), 5, -3), kMin);
  REQUIRE(rep.success());
  CHECK(rep.diagnosis.positions == std::vector<int>{1});
  CHECK(rep.recovered->c == Mat2(18, 11, 21, 13));
}

TEST_CASE("correct_double_cross: both rows above b") {
  // True errors e1 = 7, e3 = 4.
  CorrectionReport rep =
      correct_double_cross(rx(Mat2(25, 11, 25, 13), 5, -3), kMin);
  REQUIRE(rep.success());
  CHECK(rep.diagnosis.kind == DiagnosisKind::DoubleCross);
  CHECK(rep.diagnosis.positions == std::vector<int>{1, 3});
  CHECK(rep.recovered->c == Mat2(18, 11, 21, 13));
  CHECK(*rep.error == Mat2(7, 0, 4, 0));
  CHECK(rep.diophantine_solves == 0);
}

TEST_CASE("correct_double_cross: both rows below a") {
  // True errors e2 = 4, e4 = 5.
  CorrectionReport rep =
      correct_double_cross(rx(Mat2(18, 15, 21, 18), 5, -3), kMin);
  REQUIRE(rep.success());
  CHECK(rep.diagnosis.positions == std::vector<int>{2, 4});
  CHECK(rep.recovered->c == Mat2(18, 11, 21, 13));
}

TEST_CASE("correct_double_cross on a clean codeword under a forced hypothesis") {
  CorrectionReport rep =
      correct_double_cross(rx(Mat2(18, 11, 21, 13), 5, -3), kMin);
  REQUIRE(rep.success());
  CHECK(rep.recovered->c == Mat2(18, 11, 21, 13));
  CHECK(rep.error->is_zero());
}

TEST_CASE("correct_double_same_row: smallest-solution scan") {
  // Row 1 garbage; solving x*13 - y*21 = 3 gives (39,24) -> decoded (3,3),
  // rejected by the entry bound, then (18,11) -> (1,2), accepted.
  CorrectionReport rep =
      correct_double_same_row(rx(Mat2(30, 7, 21, 13), 5, -3), 1, kMin);
  REQUIRE(rep.success());
  CHECK(rep.diagnosis.kind == DiagnosisKind::DoubleSameRow);
  CHECK(rep.diagnosis.row == 1);
  CHECK(rep.recovered->c == Mat2(18, 11, 21, 13));
  CHECK(rep.message->m == Mat2(1, 2, 2, 1));
  CHECK(rep.diophantine_solves == 1);
}

TEST_CASE("correct_double_same_row: clean row under a forced hypothesis") {
  CorrectionReport rep =
      correct_double_same_row(rx(Mat2(18, 11, 21, 13), 5, -3), 1, kMin);
  REQUIRE(rep.success());
  CHECK(rep.recovered->c == Mat2(18, 11, 21, 13));
  CHECK(rep.error->is_zero());
}

TEST_CASE("correct_double_same_row: minimality resolves the shift ambiguity") {
  // At n = 7 the family against trusted row (55, 34) contains (47,29),
  // (102,63), (157,97), (212,131), all decoding to in-bound messages; only
  // the (47,29) decode is minimal.
  ReceivedMatrix r = rx(Mat2(30, 7, 55, 34), 7, -3);

  CorrectionReport amb = correct_double_same_row(r, 1, MessageProfile::Unrestricted);
  CHECK_FALSE(amb.success());
  CHECK(amb.ambiguity_note.has_value());
  CHECK(amb.diagnosis.candidates.size() >= 2);

  CorrectionReport rep = correct_double_same_row(r, 1, kMin);
  REQUIRE(rep.success());
  CHECK(rep.recovered->c == Mat2(47, 29, 55, 34));
  CHECK(rep.message->m == Mat2(1, 2, 2, 1));
}

TEST_CASE("correct_triple: worked example with errors e2, e3, e4") {
  // Guess "c1 correct": e2 = ceil(16 - 18*5/8) = 5, then 18y - 11x = 3
  // gives (21,13); (39,24) is rejected by the bound.
  std::vector<TripleGuessTrace> trace;
  CorrectionReport rep =
      correct_triple(rx(Mat2(18, 16, 27, 17), 5, -3), kMin, &trace);
  REQUIRE(rep.success());
  CHECK(rep.diagnosis.kind == DiagnosisKind::Triple);
  CHECK(rep.recovered->c == Mat2(18, 11, 21, 13));
  CHECK(rep.message->m == Mat2(1, 2, 2, 1));
  CHECK(rep.diagnosis.positions == std::vector<int>{2, 3, 4});
  REQUIRE(trace.size() == 4);
  CHECK(trace[0].first_check_passed);  // the correct guess
}

TEST_CASE("correct_triple: inconsistent hypotheses die on gcd divisibility") {
  // errors e2 = 7, e3 = 5, e4 = -1; guesses c3/c4 lead to equations whose
  // gcd does not divide the target and contribute nothing.
  CorrectionReport rep = correct_triple(rx(Mat2(18, 18, 26, 12), 5, -3), kMin);
  REQUIRE(rep.success());
  CHECK(rep.recovered->c == Mat2(18, 11, 21, 13));
}

TEST_CASE("correct_triple: wrong guesses rejected at the first interval check") {
  // n = 7, message [[2,6],[3,5]], codeword [[120,74],[128,79]],
  // errors e2 = 9, e3 = 4, e4 = -4.
  std::vector<TripleGuessTrace> trace;
  CorrectionReport rep =
      correct_triple(rx(Mat2(120, 83, 132, 75), 7, -8), kMin, &trace);
  REQUIRE(trace.size() == 4);
  CHECK(trace[0].first_check_passed);        // c1 really is clean
  CHECK_FALSE(trace[1].first_check_passed);  // repaired ratios land outside
  CHECK_FALSE(trace[2].first_check_passed);
  CHECK_FALSE(trace[3].first_check_passed);
  // The surviving guess yields two verified candidates, honest ambiguity.
  CHECK_FALSE(rep.success());
  REQUIRE(rep.diagnosis.candidates.size() == 2);
  bool truth_listed = false;
  for (const auto& cand : rep.diagnosis.candidates)
    if (cand.c == Mat2(120, 74, 128, 79)) truth_listed = true;
  CHECK(truth_listed);
}

TEST_CASE("correct pipeline: stage selection") {
  // Clean input.
  CorrectionReport rep = correct(rx(Mat2(18, 11, 21, 13), 5, -3), kMin);
  REQUIRE(rep.success());
  CHECK(rep.diagnosis.kind == DiagnosisKind::NoError);
  CHECK(rep.stage == Stage::Clean);
  CHECK(rep.message->m == Mat2(1, 2, 2, 1));

  // Single error.
  rep = correct(rx(Mat2(20, 11, 21, 13), 5, -3), kMin);
  REQUIRE(rep.success());
  CHECK(rep.stage == Stage::Single);
  CHECK(rep.diophantine_solves == 0);

  // Cross double.
  rep = correct(rx(Mat2(25, 11, 25, 13), 5, -3), kMin);
  REQUIRE(rep.success());
  CHECK(rep.stage == Stage::CrossDouble);
  CHECK(rep.diophantine_solves == 0);

  // Same-row double.
  rep = correct(rx(Mat2(30, 7, 21, 13), 5, -3), kMin);
  REQUIRE(rep.success());
  CHECK(rep.stage == Stage::SameRowDouble);

  // Triple.
  rep = correct(rx(Mat2(18, 16, 27, 17), 5, -3), kMin);
  REQUIRE(rep.success());
  CHECK(rep.stage == Stage::Triple);
  CHECK(rep.recovered->c == Mat2(18, 11, 21, 13));
}

TEST_CASE("determinant-preserving row shift: errors (e1,e2) = (c3,c4)") {
  // On [[1,1],[1,1]] the shift by row 2 keeps det = 0, so detection passes
  // while the minimal decode fails.  Knowing the corrupted row, the scan
  // recovers the truth; without that knowledge the case is genuinely
  // ambiguous ([[2,2],[2,2]] explains the received matrix equally well) and
  // the pipeline says so instead of guessing.
  ReceivedMatrix r = rx(Mat2(26, 16, 13, 8), 5, 0);
  CHECK(detect(r));

  CorrectionReport fixed = correct_double_same_row(r, 1, kMin);
  REQUIRE(fixed.success());
  CHECK(fixed.recovered->c == Mat2(13, 8, 13, 8));
  CHECK(fixed.message->m == Mat2(1, 1, 1, 1));

  CorrectionReport rep = correct(r, kMin);
  CHECK_FALSE(rep.success());
  REQUIRE(rep.diagnosis.candidates.size() == 2);
  CHECK(rep.diagnosis.candidates[0].c == Mat2(13, 8, 13, 8));
  CHECK(rep.diagnosis.candidates[1].c == Mat2(26, 16, 26, 16));

  // Under the unrestricted profile the same corruption decodes to a valid
  // message and passes as clean: the documented blind spot.
  CorrectionReport blind = correct(r, MessageProfile::Unrestricted);
  REQUIRE(blind.success());
  CHECK(blind.diagnosis.kind == DiagnosisKind::NoError);
  CHECK(blind.message->m == Mat2(2, 2, 1, 1));  // wrong but undetectable
}

TEST_CASE("correct pipeline: in-interval shift pair, determinant mismatch") {
  // Shift (3,2) on row 1 of [[18,11],[21,13]] keeps the ratio inside [a,b]
  // but breaks the determinant; both rows classify inside.
  ReceivedMatrix r = rx(Mat2(21, 13, 21, 13), 5, -3);
  CHECK_FALSE(detect(r));
  Classification cls = classify(r);
  CHECK(cls.row1_inside);
  CHECK(cls.row2_inside);
  CorrectionReport rep = correct(r, kMin);
  REQUIRE(rep.success());
  CHECK(rep.stage == Stage::SameRowDouble);
  CHECK(rep.recovered->c == Mat2(18, 11, 21, 13));
}

TEST_CASE("correct pipeline: even order") {
  MessageMatrix msg{Mat2(1, 4, 2, 3), 6};
  Codeword cw = encode(msg);
  CorrectionReport rep =
      correct(rx(cw.c, 6, cw.check), MessageProfile::Unrestricted);
  REQUIRE(rep.success());
  CHECK(rep.diagnosis.kind == DiagnosisKind::NoError);

  Mat2 corrupted = cw.c;
  corrupted.at(1) += 2;
  rep = correct(rx(corrupted, 6, cw.check), MessageProfile::Unrestricted);
  CHECK_FALSE(rep.success());
  CHECK(rep.diagnosis.reason.find("odd") != std::string::npos);
}

TEST_CASE("correction operations reject even orders") {
  ReceivedMatrix r = rx(Mat2(5, 3, 3, 2), 4, 1);
  CHECK_THROWS_AS(correct_single(r, kMin), DomainError);
  CHECK_THROWS_AS(correct_double_cross(r, kMin), DomainError);
  CHECK_THROWS_AS(correct_double_same_row(r, 1, kMin), DomainError);
  CHECK_THROWS_AS(correct_triple(r, kMin), DomainError);
}

TEST_CASE("correct pipeline: degenerate all-zero input is uncorrectable") {
  CorrectionReport rep = correct(rx(Mat2(0, 0, 0, 0), 5, 0), kMin);
  CHECK_FALSE(rep.success());
}
