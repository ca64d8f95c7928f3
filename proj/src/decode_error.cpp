#include "decinf/decode_error.hpp"

namespace decinf {

std::string_view to_string(DecodeErrorKind kind) noexcept {
  switch (kind) {
    case DecodeErrorKind::InvalidHeader: return "invalid header";
    case DecodeErrorKind::NegativeZeroExponent: return "negative zero exponent";
    case DecodeErrorKind::DigitOutOfRange: return "digit out of range";
    case DecodeErrorKind::SignificandOutOfRange: return "significand out of range";
    case DecodeErrorKind::TruncatedInput: return "truncated input";
    case DecodeErrorKind::ExponentTooLarge: return "exponent too large";
  }
  return "unknown decode error";
}

DecodeError::DecodeError(DecodeErrorKind kind, std::size_t position)
    : std::runtime_error(std::string(to_string(kind)) + " at bit " + std::to_string(position)),
      kind_{kind},
      position_{position} {}

}  // namespace decinf
