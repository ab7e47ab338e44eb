#include "fibcode/channel.hpp"

#include <algorithm>

#include "fibcode/errors.hpp"

namespace fibcode {

const char* to_string(SignPolicy s) {
  switch (s) {
    case SignPolicy::Both: return "both";
    case SignPolicy::Positive: return "positive";
    case SignPolicy::Negative: return "negative";
  }
  return "?";
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
  if (m == 0) throw DomainError("uniform_below: bound must be positive");
  const std::uint64_t threshold = (-m) % m;  // 2^64 mod m
  std::uint64_t v = rng();
  while (v < threshold) v = rng();
  return v % m;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

namespace {

void validate_spec(const ErrorSpec& spec) {
  if (spec.count < 0 || spec.count > 4)
    throw ConfigError("error spec: count must be in 0..4");
  if (spec.bound < 1) throw ConfigError("error spec: magnitude bound must be >= 1");
  if (spec.positions) {
    if (static_cast<int>(spec.positions->size()) != spec.count)
      throw ConfigError("error spec: positions list must match the error count");
    for (int pos : *spec.positions)
      if (pos < 1 || pos > 4)
        throw ConfigError("error spec: positions must be in 1..4");
    auto sorted = *spec.positions;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ConfigError("error spec: duplicate positions");
  }
}

std::vector<int> choose_positions(std::mt19937_64& rng, const ErrorSpec& spec) {
  if (spec.positions) return *spec.positions;
  std::array<int, 4> all{1, 2, 3, 4};
  for (int i = 0; i < spec.count; ++i) {
    std::uint64_t j =
        i + uniform_below(rng, static_cast<std::uint64_t>(4 - i));
    std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
  }
  return std::vector<int>(all.begin(), all.begin() + spec.count);
}

}  // namespace

std::pair<ReceivedMatrix, Mat2> inject(const Codeword& cw, const ErrorSpec& spec) {
  validate_spec(spec);
  std::mt19937_64 rng(spec.seed);
  std::vector<int> positions = choose_positions(rng, spec);

  Mat2 error(0, 0, 0, 0);
  for (int pos : positions) {
    BigInt magnitude = BigInt(uniform_below(rng, spec.bound) + 1);
    bool negative = false;
    switch (spec.sign) {
      case SignPolicy::Both: negative = (rng() & 1) != 0; break;
      case SignPolicy::Positive: negative = false; break;
      case SignPolicy::Negative: negative = true; break;
    }
    error.at(pos) = negative ? BigInt(-magnitude) : magnitude;
  }

  ReceivedMatrix received;
  received.c = cw.c + error;
  received.n = cw.n;
  received.check = cw.check;  // the checking element transmits cleanly
  return {received, error};
}

namespace {

Mat2 sample_message(std::mt19937_64& rng, const BigInt& bound,
                    MessageProfile profile) {
  const std::uint64_t top = (bound - 1).convert_to<std::uint64_t>();
  Mat2 m;
  do {
    for (auto& cell : m.cells) cell = BigInt(uniform_below(rng, top) + 1);
  } while (profile == MessageProfile::Minimal && !is_minimal(m));
  return m;
}

}  // namespace

TrialStats run_trials(const TrialConfig& config) {
  if (config.n < 5 || config.n % 2 == 0)
    throw ConfigError("run_trials: order must be odd and >= 5");
  if (config.trials < 1) throw ConfigError("run_trials: need at least one trial");
  CodeParams p = CodeParams::make(config.n);
  if (p.entry_bound() < 2) throw ConfigError("run_trials: empty message space");
  if (p.entry_bound() > BigInt(std::uint64_t(1) << 62))
    throw ConfigError("run_trials: order too large for sampling");

  ErrorSpec spec_template;
  spec_template.count = config.errors;
  spec_template.positions = config.positions;
  spec_template.bound =
      config.bound ? config.bound : p.entry_bound().convert_to<std::uint64_t>();
  spec_template.sign = config.sign;
  validate_spec(spec_template);

  TrialStats stats;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    std::mt19937_64 rng(trial_seed(config.seed, i));
    Mat2 m = sample_message(rng, p.entry_bound(), config.profile);
    Codeword cw = encode(MessageMatrix{m, config.n}, config.profile);

    ErrorSpec spec = spec_template;
    spec.seed = rng();  // injection randomness chained off the trial generator
    auto [received, error] = inject(cw, spec);

    ++stats.trials;
    if (error.is_zero()) {
      ++stats.clean_trials;
    } else if (detect(received)) {
      ++stats.false_clean;
    } else {
      ++stats.detected;
    }

    CorrectionReport rep = correct(received, config.profile);
    if (rep.success()) {
      if (*rep.recovered == cw &&
          rep.message.has_value() && rep.message->m == m) {
        ++stats.corrected_exact;
        ++stats.stage_exact[static_cast<std::size_t>(rep.stage)];
      } else {
        ++stats.corrected_wrong;
      }
    } else if (rep.diagnosis.candidates.size() > 1) {
      ++stats.ambiguous;
    } else {
      ++stats.uncorrectable;
    }
  }
  return stats;
}

}  // namespace fibcode
