#include "decinf/selftest.hpp"

#include <array>
#include <exception>
#include <optional>
#include <stdexcept>

#include "decinf/codec.hpp"
#include "decinf/sampling.hpp"

namespace decinf {

namespace {

enum Property : unsigned { kRoundTrip, kOrder, kHeaderLaw, kComplement, kLengthLaw, kPropertyCount };

constexpr std::array<const char*, kPropertyCount> kPropertyNames{
    "round-trip", "order-homomorphism", "header-law", "complement-involution", "length-law"};

struct Codec {
  EncodeFn encode;
  DecodeFn decode;
};

using Check = std::optional<std::string>;

DecimalValue draw(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 63);
  if (pick(rng) == 0) {
    const auto specials = special_values();
    std::uniform_int_distribution<std::size_t> which(0, specials.size() - 1);
    return specials[which(rng)];
  }
  return random_finite(rng);
}

Check check_round_trip(const Codec& codec, const DecimalValue& x) {
  try {
    const DecimalValue back = codec.decode(codec.encode(x));
    if (back == x) return std::nullopt;
    return "decoded as " + render_decimal(back);
  } catch (const std::exception& e) {
    return std::string("decode failed: ") + e.what();
  }
}

int sign_of(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

Check check_order(const Codec& codec, const DecimalValue& x, const DecimalValue& y) {
  try {
    const int numeric = sign_of(compare_total(x, y));
    const int bits = sign_of(lex_compare(codec.encode(x), codec.encode(y)));
    if (numeric == bits) return std::nullopt;
    return "numeric order " + std::to_string(numeric) + " but encoding order " + std::to_string(bits);
  } catch (const std::exception& e) {
    return std::string("encode failed: ") + e.what();
  }
}

Check check_header_law(const Codec& codec, const DecimalValue& x) {
  if (!x.is_finite()) return std::nullopt;
  try {
    const std::string text = codec.encode(x).to_text();
    if (text.starts_with("10011") || text.starts_with("00100")) return "encoding starts with " + text.substr(0, 5);
    return std::nullopt;
  } catch (const std::exception& e) {
    return std::string("encode failed: ") + e.what();
  }
}

Check check_complement(const Codec&, const DecimalValue& x) {
  if (!x.is_finite()) return std::nullopt;
  const auto& digits = x.form().digits;
  if (complement_to_ten(complement_to_ten(digits)) == digits) return std::nullopt;
  return std::string("complement is not an involution");
}

Check check_length_law(const Codec& codec, const DecimalValue& x) {
  if (!x.is_finite()) return std::nullopt;
  try {
    const std::size_t measured = codec.encode(x).size();
    const std::size_t expected = canonical_length(x.form());
    if (measured == expected) return std::nullopt;
    return "length " + std::to_string(measured) + ", expected " + std::to_string(expected);
  } catch (const std::exception& e) {
    return std::string("encode failed: ") + e.what();
  }
}

using SingleCheck = Check (*)(const Codec&, const DecimalValue&);

SingleCheck single_check(Property p) {
  switch (p) {
    case kRoundTrip: return check_round_trip;
    case kHeaderLaw: return check_header_law;
    case kComplement: return check_complement;
    case kLengthLaw: return check_length_law;
    default: return nullptr;
  }
}

std::vector<DecimalValue> shrink_candidates(const DecimalValue& v) {
  std::vector<DecimalValue> out;
  if (!v.is_finite()) return out;
  const ScientificForm& f = v.form();
  auto push = [&](ScientificForm g) {
    while (g.digits.size() > 1 && g.digits.back() == 0) g.digits.pop_back();
    if (g.exponent == 0) g.exponent_sign = ExponentSign::NonNegative;
    if (g != f && is_canonical(g)) out.push_back(DecimalValue::finite(std::move(g)));
  };
  if (f.digits.size() > 1) {
    ScientificForm g = f;
    g.digits.resize(1);
    push(g);
    g = f;
    g.digits.resize((f.digits.size() + 1) / 2);
    push(g);
    g = f;
    g.digits.pop_back();
    push(g);
  }
  if (f.exponent > 0) {
    for (std::uint64_t e : {std::uint64_t{0}, f.exponent / 2, f.exponent - 1}) {
      ScientificForm g = f;
      g.exponent = e;
      push(g);
    }
  }
  if (f.exponent_sign == ExponentSign::Negative) {
    ScientificForm g = f;
    g.exponent_sign = ExponentSign::NonNegative;
    push(g);
  }
  if (f.sign == Sign::Negative) {
    ScientificForm g = f;
    g.sign = Sign::Positive;
    push(g);
  }
  if (f.digits.front() != 1) {
    ScientificForm g = f;
    g.digits.front() = 1;
    push(g);
  }
  return out;
}

// Greedy shrink of (x, y) while `fails` keeps holding.
template <typename Fails>
std::pair<DecimalValue, DecimalValue> shrink(DecimalValue x, DecimalValue y, Fails fails) {
  for (int budget = 10'000; budget > 0; --budget) {
    bool progressed = false;
    for (auto& c : shrink_candidates(x)) {
      if (fails(c, y)) {
        x = std::move(c);
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      for (auto& c : shrink_candidates(y)) {
        if (fails(x, c)) {
          y = std::move(c);
          progressed = true;
          break;
        }
      }
    }
    if (!progressed) break;
  }
  return {std::move(x), std::move(y)};
}

// Bitmask of failed properties for one case.
unsigned evaluate_case(const Codec& codec, const DecimalValue& x, const DecimalValue& y) {
  unsigned mask = 0;
  for (unsigned p = 0; p < kPropertyCount; ++p) {
    const auto property = static_cast<Property>(p);
    bool failed = false;
    if (property == kOrder) {
      failed = check_order(codec, x, y).has_value();
    } else {
      const SingleCheck check = single_check(property);
      failed = check(codec, x).has_value() || check(codec, y).has_value();
    }
    if (failed) mask |= 1U << p;
  }
  return mask;
}

PropertyFailure report_failure(const Codec& codec, Property property, std::uint64_t index,
                               const DecimalValue& x, const DecimalValue& y) {
  PropertyFailure failure;
  failure.property = kPropertyNames[property];
  failure.case_index = index;
  if (property == kOrder) {
    auto [sx, sy] = shrink(x, y, [&](const DecimalValue& a, const DecimalValue& b) {
      return check_order(codec, a, b).has_value();
    });
    failure.counterexample = {render_decimal(sx), render_decimal(sy)};
    failure.detail = check_order(codec, sx, sy).value_or("");
    return failure;
  }
  const SingleCheck check = single_check(property);
  const DecimalValue& culprit = check(codec, x).has_value() ? x : y;
  auto [sx, unused] = shrink(culprit, culprit, [&](const DecimalValue& a, const DecimalValue&) {
    return check(codec, a).has_value();
  });
  failure.counterexample = {render_decimal(sx)};
  failure.detail = check(codec, sx).value_or("");
  return failure;
}

}  // namespace

SelfTestReport run_selftest(const SelfTestConfig& config) {
  Codec codec{config.encoder, config.decoder};
  if (!codec.encode) codec.encode = [](const DecimalValue& v) { return encode(v); };
  if (!codec.decode) codec.decode = [](const BitString& b) { return decode(b); };

  const auto n = static_cast<std::ptrdiff_t>(config.cases);
  std::vector<unsigned char> masks(config.cases, 0);
  auto run_case = [&](std::ptrdiff_t i) {
    auto rng = case_rng(config.seed, static_cast<std::uint64_t>(i));
    const DecimalValue x = draw(rng);
    const DecimalValue y = draw(rng);
    masks[static_cast<std::size_t>(i)] = static_cast<unsigned char>(evaluate_case(codec, x, y));
  };
  if (config.parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (std::ptrdiff_t i = 0; i < n; ++i) run_case(i);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) run_case(i);
  }

  SelfTestReport report;
  report.cases = config.cases;
  for (unsigned p = 0; p < kPropertyCount; ++p) {
    for (std::uint64_t i = 0; i < config.cases; ++i) {
      if ((masks[i] & (1U << p)) == 0) continue;
      auto rng = case_rng(config.seed, i);
      const DecimalValue x = draw(rng);
      const DecimalValue y = draw(rng);
      report.failures.push_back(report_failure(codec, static_cast<Property>(p), i, x, y));
      break;
    }
  }
  return report;
}

std::vector<std::string> mutant_names() { return {"flip-last-bit", "no-complement", "plain-exponent"}; }

EncodeFn make_mutant(const std::string& name) {
  if (name == "flip-last-bit") {
    return [](const DecimalValue& v) {
      BitString bits = encode(v);
      if (v.is_finite()) bits.invert_from(bits.size() - 1);
      return bits;
    };
  }
  if (name == "no-complement") {
    // Negative significands stored as m rather than 10 - m.
    return [](const DecimalValue& v) {
      if (!v.is_finite() || v.form().sign == Sign::Positive) return encode(v);
      auto fields = encode_fields(v);
      BitString bits;
      bits.append(fields[0]);
      bits.append(fields[1]);
      bits.append(encode_significand(v.form().digits, false));
      return bits;
    };
  }
  if (name == "plain-exponent") {
    // Exponent field never inverted.
    return [](const DecimalValue& v) {
      if (!v.is_finite()) return encode(v);
      auto fields = encode_fields(v);
      BitString bits;
      bits.append(fields[0]);
      BitString te = fields[1];
      if (!te[0]) te.invert_from(0);
      for (std::size_t i = 1; i < fields.size(); ++i) bits.append(i == 1 ? te : fields[i]);
      return bits;
    };
  }
  throw std::invalid_argument("unknown mutant '" + name + "'");
}

}  // namespace decinf
