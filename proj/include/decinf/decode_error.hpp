#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace decinf {

/// Failure modes of decoding an invalid bit sequence.
enum class DecodeErrorKind : std::uint8_t {
  /// Starts with 01 or 11 but is not -0, +INF or NaN; or a special form is
  /// followed by extra bits.
  InvalidHeader,
  /// Exponent 0 encoded with a negative exponent sign (prefix 10011 / 00100).
  NegativeZeroExponent,
  /// Tetrade above 9 or declet above 999.
  DigitOutOfRange,
  /// Significand outside [1, 10) after the optional complement.
  SignificandOutOfRange,
  /// Input ends inside a field.
  TruncatedInput,
  /// Exponent field decodes to a value above the configured bound.
  ExponentTooLarge,
};

std::string_view to_string(DecodeErrorKind kind) noexcept;

class DecodeError : public std::runtime_error {
 public:
  DecodeError(DecodeErrorKind kind, std::size_t position);

  [[nodiscard]] DecodeErrorKind kind() const noexcept { return kind_; }
  /// Bit index where the offending field starts.
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  DecodeErrorKind kind_;
  std::size_t position_;
};

}  // namespace decinf
