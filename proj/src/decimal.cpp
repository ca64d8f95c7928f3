#include "decinf/decimal.hpp"

#include <algorithm>
#include <limits>

namespace decinf {

bool is_canonical_significand(std::span<const std::uint8_t> digits) noexcept {
  if (digits.empty() || digits.front() < 1 || digits.front() > 9) {
    return false;
  }
  if (std::any_of(digits.begin(), digits.end(), [](std::uint8_t d) { return d > 9; })) {
    return false;
  }
  return digits.size() == 1 || digits.back() != 0;
}

bool is_canonical(const ScientificForm& form) noexcept {
  if (!is_canonical_significand(form.digits)) {
    return false;
  }
  return form.exponent != 0 || form.exponent_sign == ExponentSign::NonNegative;
}

DecimalValue DecimalValue::finite(ScientificForm form) {
  if (!is_canonical(form)) {
    throw std::invalid_argument("decimal: scientific form is not canonical");
  }
  DecimalValue v{Kind::Finite};
  v.form_ = std::move(form);
  return v;
}

const ScientificForm& DecimalValue::form() const {
  if (kind_ != Kind::Finite) {
    throw std::logic_error("decimal: form() called on a non-finite value");
  }
  return form_;
}

ParseError::ParseError(Reason reason, std::size_t position, const std::string& what)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      reason_{reason},
      position_{position} {}

namespace {

bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

[[noreturn]] void malformed(std::size_t pos, const char* what) {
  throw ParseError(ParseError::Reason::Malformed, pos, what);
}

}  // namespace

DecimalValue parse_decimal(std::string_view text, const ParseOptions& options) {
  if (options.max_exponent > kExponentCeiling) {
    throw std::invalid_argument("decimal: max_exponent exceeds the supported ceiling");
  }
  if (text == "INF" || text == "+INF") return DecimalValue::positive_infinity();
  if (text == "-INF") return DecimalValue::negative_infinity();
  if (text == "NaN") return DecimalValue::nan();

  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }

  const std::size_t int_begin = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  const std::string_view int_part = text.substr(int_begin, pos - int_begin);
  if (int_part.empty()) malformed(pos, "expected a digit");

  std::string_view frac_part;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t frac_begin = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    frac_part = text.substr(frac_begin, pos - frac_begin);
    if (frac_part.empty()) malformed(pos, "expected a digit after '.'");
  }

  // Written exponent, saturated well above any permitted bound.
  constexpr std::int64_t kSaturation = std::int64_t{1} << 62;
  std::int64_t written_exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    const std::size_t exp_begin = pos;
    while (pos < text.size() && is_digit(text[pos])) {
      if (written_exponent < kSaturation) {
        written_exponent = written_exponent * 10 + (text[pos] - '0');
      }
      ++pos;
    }
    if (pos == exp_begin) malformed(pos, "expected exponent digits");
    written_exponent = std::min(written_exponent, kSaturation);
    if (exp_negative) written_exponent = -written_exponent;
  }
  if (pos != text.size()) malformed(pos, "unexpected character");

  // All mantissa digits in order; the decimal point sits after int_part.
  std::vector<std::uint8_t> all;
  all.reserve(int_part.size() + frac_part.size());
  for (char c : int_part) all.push_back(static_cast<std::uint8_t>(c - '0'));
  for (char c : frac_part) all.push_back(static_cast<std::uint8_t>(c - '0'));

  const auto first = std::find_if(all.begin(), all.end(), [](std::uint8_t d) { return d != 0; });
  if (first == all.end()) {
    return negative ? DecimalValue::negative_zero() : DecimalValue::positive_zero();
  }
  const auto last = std::find_if(all.rbegin(), all.rend(), [](std::uint8_t d) { return d != 0; });

  const auto lead_index = static_cast<std::int64_t>(first - all.begin());
  const std::int64_t exponent =
      static_cast<std::int64_t>(int_part.size()) - 1 - lead_index + written_exponent;
  const std::uint64_t magnitude =
      exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  if (magnitude > options.max_exponent) {
    throw ParseError(ParseError::Reason::ExponentTooLarge, 0,
                     "exponent too large (|e| = " + std::to_string(magnitude) + ")");
  }

  ScientificForm form;
  form.sign = negative ? Sign::Negative : Sign::Positive;
  form.exponent_sign = exponent < 0 ? ExponentSign::Negative : ExponentSign::NonNegative;
  form.exponent = magnitude;
  form.digits.assign(first, last.base());
  return DecimalValue::finite(std::move(form));
}

std::string render_decimal(const DecimalValue& value, const RenderOptions& options) {
  switch (value.kind()) {
    case DecimalValue::Kind::PositiveZero: return "0";
    case DecimalValue::Kind::NegativeZero: return "-0";
    case DecimalValue::Kind::PositiveInfinity: return "INF";
    case DecimalValue::Kind::NegativeInfinity: return "-INF";
    case DecimalValue::Kind::NaN: return "NaN";
    case DecimalValue::Kind::Finite: break;
  }

  const ScientificForm& f = value.form();
  std::string out;
  if (f.sign == Sign::Negative) out.push_back('-');
  const auto digit = [&](std::size_t i) { return static_cast<char>('0' + f.digits[i]); };
  const std::size_t n = f.digits.size();

  if (f.exponent > options.positional_limit) {
    out.push_back(digit(0));
    if (n > 1) {
      out.push_back('.');
      for (std::size_t i = 1; i < n; ++i) out.push_back(digit(i));
    }
    out.push_back('E');
    if (f.exponent_sign == ExponentSign::Negative) out.push_back('-');
    out += std::to_string(f.exponent);
    return out;
  }

  const auto e = static_cast<std::size_t>(f.exponent);
  if (f.exponent_sign == ExponentSign::Negative) {
    out += "0.";
    out.append(e - 1, '0');
    for (std::size_t i = 0; i < n; ++i) out.push_back(digit(i));
    return out;
  }
  for (std::size_t i = 0; i <= e; ++i) out.push_back(i < n ? digit(i) : '0');
  if (n > e + 1) {
    out.push_back('.');
    for (std::size_t i = e + 1; i < n; ++i) out.push_back(digit(i));
  }
  return out;
}

namespace {

// Magnitude order of two finite forms, ignoring the overall sign.
std::strong_ordering compare_magnitude(const ScientificForm& a, const ScientificForm& b) {
  const bool a_neg = a.exponent_sign == ExponentSign::Negative;
  const bool b_neg = b.exponent_sign == ExponentSign::Negative;
  if (a_neg != b_neg) {
    return a_neg ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.exponent != b.exponent) {
    const auto by_exponent = a.exponent <=> b.exponent;
    return a_neg ? 0 <=> by_exponent : by_exponent;
  }
  // No trailing zeros, so digit sequences order like decimal fractions.
  return std::lexicographical_compare_three_way(a.digits.begin(), a.digits.end(),
                                                b.digits.begin(), b.digits.end());
}

// Rank of the class a value belongs to, ascending along the real line.
int coarse_rank(const DecimalValue& v) {
  switch (v.kind()) {
    case DecimalValue::Kind::NegativeInfinity: return 0;
    case DecimalValue::Kind::Finite: return v.form().sign == Sign::Negative ? 1 : 3;
    case DecimalValue::Kind::NegativeZero:
    case DecimalValue::Kind::PositiveZero: return 2;
    case DecimalValue::Kind::PositiveInfinity: return 4;
    case DecimalValue::Kind::NaN: return 5;
  }
  return 5;
}

}  // namespace

std::partial_ordering compare_numeric(const DecimalValue& a, const DecimalValue& b) {
  if (a.is_nan() || b.is_nan()) {
    return std::partial_ordering::unordered;
  }
  const int ra = coarse_rank(a);
  const int rb = coarse_rank(b);
  if (ra != rb || (ra != 1 && ra != 3)) {
    return ra <=> rb;
  }
  const auto magnitude = compare_magnitude(a.form(), b.form());
  return ra == 1 ? 0 <=> magnitude : magnitude;
}

std::strong_ordering compare_total(const DecimalValue& a, const DecimalValue& b) {
  if (a.is_nan() || b.is_nan()) {
    return a.is_nan() <=> b.is_nan();
  }
  const auto numeric = compare_numeric(a, b);
  if (numeric == std::partial_ordering::less) return std::strong_ordering::less;
  if (numeric == std::partial_ordering::greater) return std::strong_ordering::greater;
  // Only the two zeros are numerically equal yet distinct.
  return a.kind() <=> b.kind();
}

}  // namespace decinf
