#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/// \file
/// Arbitrary-precision decimal value model.
///
/// A finite non-zero decimal is held in canonical scientific form
/// `sign * m * 10^(exponent_sign * exponent)` with `m` in [1, 10) stored as a
/// digit sequence. Zero, the infinities and NaN are separate kinds. Values are
/// immutable after construction and never perform arithmetic.

namespace decinf {

enum class Sign : std::uint8_t { Negative, Positive };
enum class ExponentSign : std::uint8_t { Negative, NonNegative };

/// Default bound on |exponent| accepted by the parser and the decoder.
inline constexpr std::uint64_t kDefaultMaxExponent = std::uint64_t{1} << 32;
/// Hard ceiling for any configured exponent bound; keeps `exponent + 2`
/// and the gamma field arithmetic inside 64 bits.
inline constexpr std::uint64_t kExponentCeiling = std::uint64_t{1} << 62;

struct ScientificForm {
  Sign sign = Sign::Positive;
  ExponentSign exponent_sign = ExponentSign::NonNegative;
  std::uint64_t exponent = 0;
  /// Leading digit first; it sits before the decimal point.
  std::vector<std::uint8_t> digits{1};

  friend bool operator==(const ScientificForm&, const ScientificForm&) = default;
};

/// True when `digits` is non-empty, starts with 1-9, holds only 0-9 and has no
/// trailing zero (a single digit is allowed).
bool is_canonical_significand(std::span<const std::uint8_t> digits) noexcept;

/// Checks every ScientificForm invariant, including "exponent 0 is
/// non-negative".
bool is_canonical(const ScientificForm& form) noexcept;

class DecimalValue {
 public:
  enum class Kind : std::uint8_t {
    NegativeInfinity,
    Finite,
    NegativeZero,
    PositiveZero,
    PositiveInfinity,
    NaN,
  };

  DecimalValue() = default;  // +0

  /// Throws std::invalid_argument when `form` is not canonical.
  static DecimalValue finite(ScientificForm form);
  static DecimalValue positive_zero() noexcept { return DecimalValue{Kind::PositiveZero}; }
  static DecimalValue negative_zero() noexcept { return DecimalValue{Kind::NegativeZero}; }
  static DecimalValue positive_infinity() noexcept { return DecimalValue{Kind::PositiveInfinity}; }
  static DecimalValue negative_infinity() noexcept { return DecimalValue{Kind::NegativeInfinity}; }
  static DecimalValue nan() noexcept { return DecimalValue{Kind::NaN}; }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  [[nodiscard]] bool is_zero() const noexcept {
    return kind_ == Kind::PositiveZero || kind_ == Kind::NegativeZero;
  }
  [[nodiscard]] bool is_nan() const noexcept { return kind_ == Kind::NaN; }

  /// Only meaningful for finite values; throws std::logic_error otherwise.
  [[nodiscard]] const ScientificForm& form() const;

  friend bool operator==(const DecimalValue&, const DecimalValue&) = default;

 private:
  explicit DecimalValue(Kind kind) noexcept : kind_{kind} {}

  Kind kind_ = Kind::PositiveZero;
  ScientificForm form_{};
};

class ParseError : public std::runtime_error {
 public:
  enum class Reason : std::uint8_t { Malformed, ExponentTooLarge };

  ParseError(Reason reason, std::size_t position, const std::string& what);

  [[nodiscard]] Reason reason() const noexcept { return reason_; }
  /// Character offset in the input where parsing failed.
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  Reason reason_;
  std::size_t position_;
};

struct ParseOptions {
  /// Values whose |exponent| exceeds this raise ParseError::ExponentTooLarge.
  /// Must not exceed kExponentCeiling.
  std::uint64_t max_exponent = kDefaultMaxExponent;
};

/// Grammar: `[+-]? digits ('.' digits)? ([eE] [+-]? digits)?` or one of the
/// tokens `INF`, `-INF`, `NaN`. Signed zero spellings ("-0", "-0.00") give
/// NegativeZero.
DecimalValue parse_decimal(std::string_view text, const ParseOptions& options = {});

struct RenderOptions {
  /// Finite values with exponent magnitude above this use scientific
  /// notation ("4.05E-20"); others are written positionally.
  std::uint64_t positional_limit = 20;
};

std::string render_decimal(const DecimalValue& value, const RenderOptions& options = {});

/// Real-number order. NaN on either side gives `unordered`; the two zeros are
/// equivalent.
std::partial_ordering compare_numeric(const DecimalValue& a, const DecimalValue& b);

/// Refinement of compare_numeric into a total order on every value: -0 sorts
/// immediately before +0 and NaN sorts after +INF. This is the order the
/// encodings realize.
std::strong_ordering compare_total(const DecimalValue& a, const DecimalValue& b);

}  // namespace decinf
