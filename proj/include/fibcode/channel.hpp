#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "fibcode/codec.hpp"
#include "fibcode/correction.hpp"

namespace fibcode {

enum class SignPolicy { Both, Positive, Negative };

const char* to_string(SignPolicy s);

// Deterministic error injection: identical spec => identical output.
// Generator: std::mt19937_64 seeded with `seed`; draw order is positions
// (when not fixed), then per position magnitude then sign.
struct ErrorSpec {
  int count = 1;                             // 0..4 corrupted entries
  std::optional<std::vector<int>> positions; // fixed positions 1..4, else random
  std::uint64_t bound = 1;                   // magnitudes drawn from [1, bound]
  SignPolicy sign = SignPolicy::Both;
  std::uint64_t seed = 0;
};

// Returns (received matrix, ground-truth error matrix); the check field is
// copied unmodified.  Throws ConfigError on an invalid spec.
std::pair<ReceivedMatrix, Mat2> inject(const Codeword& cw, const ErrorSpec& spec);

struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t clean_trials = 0;      // trials with zero injected errors
  std::uint64_t detected = 0;          // injected errors, determinant mismatch
  std::uint64_t false_clean = 0;       // injected errors, determinant preserved
  std::uint64_t corrected_exact = 0;
  std::uint64_t corrected_wrong = 0;
  std::uint64_t uncorrectable = 0;
  std::uint64_t ambiguous = 0;
  // Successful-stage histogram for corrected_exact, indexed by Stage.
  std::array<std::uint64_t, 6> stage_exact{};

  bool operator==(const TrialStats& o) const = default;
};

struct TrialConfig {
  int n = 7;
  MessageProfile profile = MessageProfile::Minimal;
  int errors = 1;
  std::uint64_t bound = 0;  // 0 = default F_{n-1}
  SignPolicy sign = SignPolicy::Both;
  std::optional<std::vector<int>> positions;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
};

// Per-trial generators are derived from (seed, trial index) with splitmix64,
// so any evaluation order produces identical aggregates.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

// Monte-Carlo harness: sample a valid message, encode, inject, run the full
// correction pipeline and compare with the ground truth.
TrialStats run_trials(const TrialConfig& config);

// splitmix64 mix function (public so the docs can name the exact algorithm).
std::uint64_t splitmix64(std::uint64_t x);

// Unbiased uniform draw from [0, m) using rejection sampling on raw 64-bit
// outputs; avoids std::uniform_int_distribution which varies by platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m);

}  // namespace fibcode
