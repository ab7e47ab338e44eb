#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibcode/codec.hpp"
#include "fibcode/matrix.hpp"

namespace fibcode {

// Untrusted received matrix: entries are arbitrary integers, the check field
// is the received det M (assumed to transmit cleanly).
struct ReceivedMatrix {
  Mat2 c;
  int n = 0;
  BigInt check;
};

enum class DiagnosisKind {
  NoError,
  Single,
  DoubleCross,
  DoubleSameRow,
  Triple,
  Uncorrectable,
};

enum class Stage { None, Clean, Single, CrossDouble, SameRowDouble, Triple };

const char* to_string(DiagnosisKind kind);
const char* to_string(Stage stage);

struct Diagnosis {
  DiagnosisKind kind = DiagnosisKind::Uncorrectable;
  std::vector<int> positions;        // entries that were repaired (1..4)
  int row = 0;                       // same-row case: which row was solved
  std::string reason;                // failure detail for Uncorrectable
  std::vector<Codeword> candidates;  // ambiguity set when not unique
};

std::string to_string(const Diagnosis& d);

struct CorrectionReport {
  Diagnosis diagnosis;
  std::optional<Codeword> recovered;
  std::optional<MessageMatrix> message;
  std::optional<Mat2> error;  // received - recovered, entrywise
  std::optional<std::string> ambiguity_note;
  Stage stage = Stage::None;
  int diophantine_solves = 0;

  bool success() const { return recovered.has_value(); }
};

// True (clean) iff det of the received entries equals (-1)^n * check.  A
// true result does not rule out unimodular-type corruption U*C.
bool detect(const ReceivedMatrix& r);

// Which row ratios sit inside the closed interval [a, b].  Requires odd n.
struct Classification {
  bool row1_inside = false;
  bool row2_inside = false;
};

Classification classify(const ReceivedMatrix& r);

// Evaluates the four quotients x_i = ((-1)^n check + cross term) / entry and
// repairs the codeword when exactly one substitution survives the full
// verification (determinant, intervals, decoded bounds, profile).
CorrectionReport correct_single(const ReceivedMatrix& r, MessageProfile profile);

// Closed-form repair of one suspect entry per row via the golden-ratio
// interval bounds; candidate combinations are disambiguated with the
// checking element.  Uses no Diophantine solving.
CorrectionReport correct_double_cross(const ReceivedMatrix& r,
                                      MessageProfile profile);

// Repairs two errors confined to `row` (1 or 2) by solving the linear
// Diophantine equation against the trusted other row and scanning the
// solution family upward for the smallest member passing interval, bound
// and (under MINIMAL) minimality checks.
CorrectionReport correct_double_same_row(const ReceivedMatrix& r, int row,
                                         MessageProfile profile);

// Per-guess record of the trial-and-error triple correction.
struct TripleGuessTrace {
  int guess = 0;                  // entry assumed correct (1..4)
  bool applicable = false;        // guess could be evaluated at all
  bool first_check_passed = false;  // repaired row landed back in [a, b]
  int candidates = 0;             // fully verified candidates contributed
};

// Trial-and-error three-error correction: each guess fixes the single-error
// row by the closed form, checks the repaired ratio, then solves the other
// row.  Returns the unique surviving candidate or lists all survivors.
CorrectionReport correct_triple(const ReceivedMatrix& r, MessageProfile profile,
                                std::vector<TripleGuessTrace>* trace = nullptr);

// Full pipeline: detect -> decode -> single -> classify -> cross-double ->
// same-row -> triple, stopping at the first stage with a unique verified
// repair.  The report records the successful stage and the number of
// Diophantine solves performed.
CorrectionReport correct(const ReceivedMatrix& r, MessageProfile profile);

}  // namespace fibcode
