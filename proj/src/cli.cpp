#include "decinf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <istream>
#include <ostream>

#include "decinf/batch.hpp"
#include "decinf/codec.hpp"
#include "decinf/decimal.hpp"
#include "decinf/selftest.hpp"
#include "decinf/size_bench.hpp"
#include "decinf/variants.hpp"

namespace decinf::cli {

namespace {

enum class Format { Auto, Bits, Hex, Both };

struct Settings {
  std::string variant = "canonical";
  bool trim = false;
  std::string format = "auto";
  std::vector<std::string> inputs;
  std::uint64_t seed = 42;
  std::uint64_t cases = 100'000;
  std::string mutant;
  bool serial = false;
  std::string max = "1e40";
  std::size_t samples = 81;
};

/// Error carrying the process exit code.
struct Failure {
  int code;
  std::string message;
};

CodecOptions codec_options(const Settings& s) {
  CodecOptions options;
  options.trim_trailing_zero_bits = s.trim;
  if (s.variant == "canonical") {
    options.variant = Variant::Canonical;
  } else if (s.variant == "prefix") {
    options.variant = Variant::PrefixFree;
  } else if (s.variant.starts_with("fixed:")) {
    options.variant = Variant::FixedWidth;
    const std::string width = s.variant.substr(6);
    if (width.empty() || width.size() > 9 ||
        !std::all_of(width.begin(), width.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Failure{kUsageError, "invalid fixed width '" + width + "'"};
    }
    options.width_bits = std::stoul(width);
  } else {
    throw Failure{kUsageError, "unknown variant '" + s.variant + "' (canonical|prefix|fixed:<bits>)"};
  }
  try {
    validate(options);
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsageError, e.what()};
  }
  return options;
}

Format output_format(const Settings& s, const CodecOptions& options) {
  if (s.format == "bits") return Format::Bits;
  if (s.format == "hex") return Format::Hex;
  if (s.format == "both") return Format::Both;
  if (s.format == "auto") return options.variant == Variant::FixedWidth ? Format::Hex : Format::Bits;
  throw Failure{kUsageError, "unknown format '" + s.format + "' (bits|hex|both)"};
}

std::string trim_spaces(std::string_view line) {
  const auto begin = line.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = line.find_last_not_of(" \t\r\n");
  return std::string(line.substr(begin, end - begin + 1));
}

std::vector<std::string> gather_inputs(const Settings& s, std::istream& in) {
  if (!s.inputs.empty()) return s.inputs;
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    std::string t = trim_spaces(line);
    if (!t.empty()) lines.push_back(std::move(t));
  }
  return lines;
}

DecimalValue parse_or_fail(const std::string& text) {
  try {
    return parse_decimal(text);
  } catch (const ParseError& e) {
    throw Failure{kUsageError, "cannot parse '" + text + "': " + e.what()};
  }
}

// Field groups of the encoding; trailing zero bits removed across groups when
// trimming.
std::vector<BitString> encoding_groups(const DecimalValue& value, const CodecOptions& options) {
  if (options.variant == Variant::PrefixFree) return encode_prefix_free_fields(value);
  std::vector<BitString> groups = encode_fields(value);
  if (options.trim_trailing_zero_bits && value.is_finite()) {
    while (groups.size() > 2) {
      BitString& last = groups.back();
      last.trim_trailing_zeros();
      if (!last.empty()) break;
      groups.pop_back();
    }
  }
  return groups;
}

int cmd_encode(const Settings& s, std::istream& in, std::ostream& out) {
  const CodecOptions options = codec_options(s);
  const Format format = output_format(s, options);
  for (const auto& text : gather_inputs(s, in)) {
    const DecimalValue value = parse_or_fail(text);
    BitString bits;
    std::string bit_text;
    try {
      bits = encode_with(value, options);
    } catch (const RangeError& e) {
      throw Failure{kUsageError, "cannot encode '" + text + "': " + e.what()};
    }
    if (options.variant == Variant::FixedWidth) {
      bit_text = bits.to_text();
    } else {
      bit_text = join_groups(encoding_groups(value, options));
    }
    const std::string hex = to_hex_text(to_bytes(bits));
    switch (format) {
      case Format::Hex: out << hex << '\n'; break;
      case Format::Both: out << bit_text << '\t' << hex << '\n'; break;
      default: out << bit_text << '\n'; break;
    }
  }
  return kSuccess;
}

BitString read_encoding(const std::string& text, const Settings& s) {
  try {
    if (s.format == "hex" || text.find('/') != std::string::npos) {
      const PackedBits packed = parse_hex_text(text);
      return from_bytes(packed.bytes, packed.bit_length);
    }
    return BitString::from_text(text);
  } catch (const FormatError& e) {
    throw Failure{kUsageError, "cannot read '" + text + "': " + e.what()};
  }
}

int cmd_decode(const Settings& s, std::istream& in, std::ostream& out) {
  const CodecOptions options = codec_options(s);
  for (const auto& text : gather_inputs(s, in)) {
    const BitString bits = read_encoding(text, s);
    try {
      if (options.variant == Variant::PrefixFree) {
        BitCursor cursor(bits);
        const auto values = decode_prefix_free_stream(cursor, options.max_exponent);
        for (std::size_t i = 0; i < values.size(); ++i) {
          out << (i ? " " : "") << render_decimal(values[i]);
        }
        out << '\n';
      } else {
        out << render_decimal(decode_with(bits, options)) << '\n';
      }
    } catch (const DecodeError& e) {
      throw Failure{kDecodeError, "decode error: " + std::string(e.what())};
    }
  }
  return kSuccess;
}

int cmd_cmp(const Settings& s, std::ostream& out) {
  if (s.inputs.size() != 2) throw Failure{kUsageError, "cmp takes exactly two values"};
  const CodecOptions options = codec_options(s);
  try {
    const BitString a = encode_with(parse_or_fail(s.inputs[0]), options);
    const BitString b = encode_with(parse_or_fail(s.inputs[1]), options);
    const auto order = lex_compare(a, b);
    out << (order < 0 ? "<" : order > 0 ? ">" : "=") << '\n';
  } catch (const RangeError& e) {
    throw Failure{kUsageError, e.what()};
  }
  return kSuccess;
}

int cmd_sort(const Settings& s, std::istream& in, std::ostream& out) {
  const CodecOptions options = codec_options(s);
  const std::vector<std::string> lines = gather_inputs(s, in);
  std::vector<DecimalValue> values;
  values.reserve(lines.size());
  for (const auto& line : lines) values.push_back(parse_or_fail(line));
  std::vector<std::size_t> order;
  try {
    order = batch::sort_by_encoding(values, options);
  } catch (const RangeError& e) {
    throw Failure{kUsageError, e.what()};
  }
  for (std::size_t i : order) out << lines[i] << '\n';
  return kSuccess;
}

int cmd_bench_size(const Settings& s, std::ostream& out) {
  try {
    write_size_table(out, bench_size(s.max, s.samples));
  } catch (const std::invalid_argument& e) {
    throw Failure{kUsageError, e.what()};
  } catch (const ParseError& e) {
    throw Failure{kUsageError, e.what()};
  }
  return kSuccess;
}

int cmd_selftest(const Settings& s, std::ostream& out) {
  SelfTestConfig config;
  config.cases = s.cases;
  config.seed = s.seed;
  config.parallel = !s.serial;
  if (!s.mutant.empty()) {
    try {
      config.encoder = make_mutant(s.mutant);
    } catch (const std::invalid_argument& e) {
      throw Failure{kUsageError, e.what()};
    }
  }
  if (config.cases == 0) {
    out << "PASS (vacuous)\n";
    return kSuccess;
  }
  const SelfTestReport report = run_selftest(config);
  if (report.passed()) {
    out << "PASS " << report.cases << " cases, seed " << config.seed << '\n';
    return kSuccess;
  }
  out << "FAIL " << report.failures.size() << " propert" << (report.failures.size() == 1 ? "y" : "ies")
      << " violated (" << report.cases << " cases, seed " << config.seed << ")\n";
  for (const auto& f : report.failures) {
    out << "  " << f.property << " (case " << f.case_index << "): counterexample";
    for (const auto& v : f.counterexample) out << ' ' << v;
    out << " -- " << f.detail << '\n';
  }
  return kSelfTestFailure;
}

void add_codec_flags(CLI::App* cmd, Settings& s) {
  cmd->add_option("--variant", s.variant, "canonical | prefix | fixed:<bits>");
  cmd->add_flag("--trim", s.trim, "drop trailing zero bits (canonical only)");
  cmd->add_option("--format", s.format, "bits | hex | both (default: hex for fixed, bits otherwise)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Order-preserving binary codec for arbitrary decimals"};
  app.name(args.empty() ? "decinf" : args.front());
  app.require_subcommand(1);

  auto* encode_cmd = app.add_subcommand("encode", "encode decimals (arguments or one per stdin line)");
  add_codec_flags(encode_cmd, s);
  encode_cmd->add_option("values", s.inputs, "decimal text");

  auto* decode_cmd = app.add_subcommand("decode", "decode bit text or hex '<bytes>/<bit length>'");
  add_codec_flags(decode_cmd, s);
  decode_cmd->add_option("encodings", s.inputs, "bit text or hex");

  auto* cmp_cmd = app.add_subcommand("cmp", "compare two decimals by their encodings");
  add_codec_flags(cmp_cmd, s);
  cmp_cmd->add_option("values", s.inputs, "two decimals")->expected(2);

  auto* sort_cmd = app.add_subcommand("sort", "sort stdin lines by their encodings");
  add_codec_flags(sort_cmd, s);

  auto* bench_cmd = app.add_subcommand("bench-size", "TSV of encoded sizes over log-spaced integers");
  bench_cmd->add_option("--max", s.max, "largest integer (default 1e40)");
  bench_cmd->add_option("--samples", s.samples, "number of log-spaced samples (default 81)");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the seeded property suite");
  selftest_cmd->add_option("--cases", s.cases, "number of random cases (default 100000)");
  selftest_cmd->add_option("--seed", s.seed, "seed (default 42)");
  selftest_cmd->add_flag("--serial", s.serial, "run cases on one thread");
  selftest_cmd->add_option("--mutant", s.mutant, "negative control: use a broken encoder")
      ->check(CLI::IsMember(mutant_names()));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (encode_cmd->parsed()) return cmd_encode(s, in, out);
    if (decode_cmd->parsed()) return cmd_decode(s, in, out);
    if (cmp_cmd->parsed()) return cmd_cmp(s, out);
    if (sort_cmd->parsed()) return cmd_sort(s, in, out);
    if (bench_cmd->parsed()) return cmd_bench_size(s, out);
    if (selftest_cmd->parsed()) return cmd_selftest(s, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  }
  return kUsageError;
}

}  // namespace decinf::cli
