#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibcode/channel.hpp"
#include "fibcode/codec.hpp"
#include "fibcode/correction.hpp"
#include "fibcode/errors.hpp"
#include "fibcode/fibonacci.hpp"
#include "fibcode/redundancy.hpp"
#include "fibcode/wire.hpp"

namespace fibcode::cli {

namespace {

using nlohmann::ordered_json;

MessageProfile parse_profile(const std::string& name) {
  if (name == "minimal") return MessageProfile::Minimal;
  if (name == "unrestricted") return MessageProfile::Unrestricted;
  throw CLI::ValidationError("--profile", "must be 'minimal' or 'unrestricted'");
}

SignPolicy parse_sign(const std::string& name) {
  if (name == "both") return SignPolicy::Both;
  if (name == "positive") return SignPolicy::Positive;
  if (name == "negative") return SignPolicy::Negative;
  throw CLI::ValidationError("--sign", "must be 'both', 'positive' or 'negative'");
}

Mat2 parse_matrix(const std::string& csv) {
  std::vector<BigInt> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) vals.emplace_back(item);
  if (vals.size() != 4)
    throw ValidationError("--matrix expects four comma-separated integers");
  return Mat2(vals[0], vals[1], vals[2], vals[3]);
}

std::string hex_to_bits(const std::string& hex) {
  std::string bits;
  bits.reserve(hex.size() * 4);
  for (char ch : hex) {
    int v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
    else throw ValidationError("--bits expects a hexadecimal string");
    for (int b = 3; b >= 0; --b) bits += ((v >> b) & 1) ? '1' : '0';
  }
  return bits;
}

std::string bits_to_hex(const std::string& bits) {
  static const char* digits = "0123456789abcdef";
  std::string hex;
  for (std::size_t i = 0; i + 4 <= bits.size(); i += 4) {
    int v = 0;
    for (int b = 0; b < 4; ++b) v = (v << 1) | (bits[i + static_cast<std::size_t>(b)] == '1');
    hex += digits[v];
  }
  return hex;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open output file: " + path);
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!f) throw Error("write failed: " + path);
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open input file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

std::vector<int> parse_positions(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

ordered_json stats_json(const TrialConfig& cfg, const TrialStats& st) {
  ordered_json j;
  j["schema"] = "fibcodec-stats/1";
  ordered_json config;
  config["n"] = cfg.n;
  config["profile"] = to_string(cfg.profile);
  config["errors"] = cfg.errors;
  config["bound"] = cfg.bound;
  config["sign"] = to_string(cfg.sign);
  if (cfg.positions) {
    config["positions"] = *cfg.positions;
  } else {
    config["positions"] = "random";
  }
  config["trials"] = cfg.trials;
  config["seed"] = cfg.seed;
  j["config"] = config;
  ordered_json totals;
  totals["trials"] = st.trials;
  totals["clean_trials"] = st.clean_trials;
  totals["detected"] = st.detected;
  totals["false_clean"] = st.false_clean;
  totals["corrected_exact"] = st.corrected_exact;
  totals["corrected_wrong"] = st.corrected_wrong;
  totals["uncorrectable"] = st.uncorrectable;
  totals["ambiguous"] = st.ambiguous;
  j["totals"] = totals;
  ordered_json stages;
  stages["clean"] = st.stage_exact[static_cast<std::size_t>(Stage::Clean)];
  stages["single"] = st.stage_exact[static_cast<std::size_t>(Stage::Single)];
  stages["cross_double"] =
      st.stage_exact[static_cast<std::size_t>(Stage::CrossDouble)];
  stages["same_row_double"] =
      st.stage_exact[static_cast<std::size_t>(Stage::SameRowDouble)];
  stages["triple"] = st.stage_exact[static_cast<std::size_t>(Stage::Triple)];
  j["stages"] = stages;
  return j;
}

std::string stats_csv(const TrialStats& st) {
  std::ostringstream os;
  os << "trials,clean_trials,detected,false_clean,corrected_exact,"
        "corrected_wrong,uncorrectable,ambiguous,stage_clean,stage_single,"
        "stage_cross_double,stage_same_row_double,stage_triple\n";
  os << st.trials << ',' << st.clean_trials << ',' << st.detected << ','
     << st.false_clean << ',' << st.corrected_exact << ','
     << st.corrected_wrong << ',' << st.uncorrectable << ',' << st.ambiguous
     << ',' << st.stage_exact[static_cast<std::size_t>(Stage::Clean)] << ','
     << st.stage_exact[static_cast<std::size_t>(Stage::Single)] << ','
     << st.stage_exact[static_cast<std::size_t>(Stage::CrossDouble)] << ','
     << st.stage_exact[static_cast<std::size_t>(Stage::SameRowDouble)] << ','
     << st.stage_exact[static_cast<std::size_t>(Stage::Triple)] << '\n';
  return os.str();
}

int cmd_encode(const std::string& matrix_csv, const std::string& bits_hex,
               int n, MessageProfile profile, const std::string& out_path,
               std::ostream& out) {
  MessageMatrix msg;
  std::uint32_t k = 0;
  if (!bits_hex.empty()) {
    std::string bits = hex_to_bits(bits_hex);
    msg = pack_message(bits, n);
    k = static_cast<std::uint32_t>(bits.size());
    if (profile == MessageProfile::Minimal && !is_minimal(msg.m)) {
      out << "note: bitstream message is not minimal; encoding as unrestricted"
          << " (same-row double-error correction is not guaranteed)\n";
      profile = MessageProfile::Unrestricted;
    }
  } else {
    msg = MessageMatrix{parse_matrix(matrix_csv), n};
  }
  Codeword cw = encode(msg, profile);
  write_file(out_path, serialize(cw, k));
  out << "message: " << msg.m.str() << "\n";
  out << "codeword: " << cw.c.str() << "\n";
  out << "check: " << cw.check.str() << "\n";
  out << "n: " << n << "\n";
  if (k) out << "k: " << k << "\n";
  return 0;
}

int cmd_decode(const std::string& in_path, bool no_correct,
               MessageProfile profile, bool profile_given, std::ostream& out) {
  WireCodeword wc = deserialize(read_file(in_path));
  ReceivedMatrix received{wc.codeword.c, wc.codeword.n, wc.codeword.check};
  // Bitstream messages carry no minimality guarantee; unless the caller
  // pinned a profile, correct them in unrestricted mode.
  if (!profile_given && wc.k > 0) profile = MessageProfile::Unrestricted;

  if (no_correct) {
    bool clean = detect(received);
    out << "detect: " << (clean ? "clean" : "errors detected") << "\n";
    if (!clean) return 1;
    MessageMatrix msg = decode(wc.codeword);
    out << "message: " << msg.m.str() << "\n";
    if (wc.k) out << "bits: " << bits_to_hex(unpack_message(msg, static_cast<int>(wc.k / 4))) << "\n";
    return 0;
  }

  CorrectionReport rep = correct(received, profile);
  out << "diagnosis: " << to_string(rep.diagnosis) << "\n";
  out << "stage: " << to_string(rep.stage) << "\n";
  if (rep.success()) {
    out << "message: " << rep.message->m.str() << "\n";
    out << "codeword: " << rep.recovered->c.str() << "\n";
    out << "error: " << rep.error->str() << "\n";
    if (wc.k)
      out << "bits: "
          << bits_to_hex(unpack_message(*rep.message, static_cast<int>(wc.k / 4)))
          << "\n";
    return 0;
  }
  for (const auto& cand : rep.diagnosis.candidates)
    out << "candidate: " << cand.c.str() << "\n";
  return 1;
}

int cmd_corrupt(const std::string& in_path, const std::string& out_path,
                int errors, std::uint64_t bound, std::uint64_t seed,
                const std::string& positions_csv, const std::string& sign,
                std::ostream& out) {
  WireCodeword wc = deserialize(read_file(in_path));
  ErrorSpec spec;
  spec.count = errors;
  spec.bound = bound;
  spec.seed = seed;
  spec.sign = parse_sign(sign);
  if (!positions_csv.empty()) spec.positions = parse_positions(positions_csv);
  auto [received, error] = inject(wc.codeword, spec);
  Codeword corrupted{received.c, received.n, received.check};
  write_file(out_path, serialize(corrupted, wc.k));
  out << "injected: " << error.str() << "\n";
  out << "received: " << received.c.str() << "\n";
  return 0;
}

int cmd_stats(const TrialConfig& cfg, const std::string& format,
              std::ostream& out) {
  TrialStats st = run_trials(cfg);
  if (format == "csv") {
    out << stats_csv(st);
  } else {
    out << stats_json(cfg, st).dump(2) << "\n";
  }
  return 0;
}

int cmd_redundancy(int n, int k, std::ostream& out) {
  RedundancyFigures fig = redundancy(n, k);
  out << "n: " << fig.n << "\n";
  out << "k: " << fig.k << "\n";
  out << "l_formula: " << fig.l_formula << "\n";
  out << "l_exact: " << fig.l_exact << "\n";
  out << "redundancy: " << fig.redundancy_formula << "\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", fig.redundancy_approx);
  out << "redundancy_approx: " << buf << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"fibcodec: golden-ratio matrix code encoder/decoder"};
  app.require_subcommand(1);

  // encode
  auto* enc = app.add_subcommand("encode", "encode a message matrix or bitstream");
  int enc_n = 5;
  std::string enc_profile = "minimal", enc_matrix, enc_bits, enc_out;
  enc->add_option("--n", enc_n, "code order (odd, >= 3)")->required();
  enc->add_option("--profile", enc_profile, "minimal|unrestricted");
  auto* opt_matrix = enc->add_option("--matrix", enc_matrix, "m1,m2,m3,m4");
  auto* opt_bits = enc->add_option("--bits", enc_bits, "message as hex digits");
  enc->add_option("--out", enc_out, "output file")->required();
  opt_matrix->excludes(opt_bits);

  // decode
  auto* dec = app.add_subcommand("decode", "decode (and correct) a codeword file");
  std::string dec_in, dec_profile = "minimal";
  bool dec_nocorrect = false;
  dec->add_option("--in", dec_in, "input file")->required();
  dec->add_flag("--no-correct", dec_nocorrect, "detect only, no correction");
  dec->add_option("--profile", dec_profile, "minimal|unrestricted");

  // corrupt
  auto* cor = app.add_subcommand("corrupt", "inject integer errors into a codeword file");
  std::string cor_in, cor_out, cor_positions, cor_sign = "both";
  int cor_errors = 1;
  std::uint64_t cor_bound = 10, cor_seed = 0;
  cor->add_option("--in", cor_in)->required();
  cor->add_option("--out", cor_out)->required();
  cor->add_option("--errors", cor_errors, "number of corrupted entries (0..4)");
  cor->add_option("--bound", cor_bound, "magnitude bound B >= 1");
  cor->add_option("--seed", cor_seed, "64-bit seed");
  cor->add_option("--positions", cor_positions, "fixed positions, e.g. 1,3");
  cor->add_option("--sign", cor_sign, "both|positive|negative");

  // stats
  auto* sta = app.add_subcommand("stats", "Monte-Carlo detection/correction statistics");
  TrialConfig cfg;
  std::string sta_profile = "minimal", sta_sign = "both", sta_positions,
              sta_format = "json";
  sta->add_option("--n", cfg.n)->required();
  sta->add_option("--errors", cfg.errors)->required();
  sta->add_option("--trials", cfg.trials)->required();
  sta->add_option("--seed", cfg.seed);
  sta->add_option("--bound", cfg.bound, "magnitude bound (default F_{n-1})");
  sta->add_option("--profile", sta_profile);
  sta->add_option("--sign", sta_sign);
  sta->add_option("--positions", sta_positions);
  sta->add_option("--format", sta_format, "json|csv");

  // redundancy
  auto* red = app.add_subcommand("redundancy", "codeword length and redundancy figures");
  int red_n = 5, red_k = 8;
  red->add_option("--n", red_n)->required();
  red->add_option("--k", red_k)->required();

  // fib
  auto* fb = app.add_subcommand("fib", "print a Fibonacci number");
  int fib_n = 1;
  fb->add_option("--n", fib_n)->required();

  std::vector<const char*> argv;
  argv.push_back("fibcodec");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (enc->parsed()) {
      if (enc_matrix.empty() && enc_bits.empty())
        throw ValidationError("encode requires --matrix or --bits");
      return cmd_encode(enc_matrix, enc_bits, enc_n, parse_profile(enc_profile),
                        enc_out, out);
    }
    if (dec->parsed())
      return cmd_decode(dec_in, dec_nocorrect, parse_profile(dec_profile),
                        dec->count("--profile") > 0, out);
    if (cor->parsed())
      return cmd_corrupt(cor_in, cor_out, cor_errors, cor_bound, cor_seed,
                         cor_positions, cor_sign, out);
    if (sta->parsed()) {
      cfg.profile = parse_profile(sta_profile);
      cfg.sign = parse_sign(sta_sign);
      if (!sta_positions.empty()) cfg.positions = parse_positions(sta_positions);
      if (sta_format != "json" && sta_format != "csv")
        throw ValidationError("--format must be json or csv");
      return cmd_stats(cfg, sta_format, out);
    }
    if (red->parsed()) return cmd_redundancy(red_n, red_k, out);
    if (fb->parsed()) {
      out << fib(fib_n).str() << "\n";
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& v : e.violations) err << "  - " << v << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace fibcode::cli
