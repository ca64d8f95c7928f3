#include "decinf/codec.hpp"

#include <stdexcept>

#include "decinf/gamma.hpp"

namespace decinf {

void validate(const CodecOptions& options) {
  if (options.variant == Variant::FixedWidth &&
      (options.width_bits < 8 || options.width_bits % 8 != 0)) {
    throw std::invalid_argument("codec: fixed width must be a multiple of 8 and at least 8");
  }
  if (options.trim_trailing_zero_bits && options.variant == Variant::PrefixFree) {
    throw std::invalid_argument("codec: bit trimming does not apply to the prefix-free variant");
  }
  if (options.max_exponent > kExponentCeiling) {
    throw std::invalid_argument("codec: max_exponent exceeds the supported ceiling");
  }
}

BitString sign_bits(Sign sign) {
  return BitString::from_text(sign == Sign::Negative ? "00" : "10");
}

std::vector<std::uint8_t> complement_to_ten(std::span<const std::uint8_t> digits) {
  if (digits.empty() || digits.back() == 0) {
    throw std::invalid_argument("complement_to_ten: last digit must be non-zero");
  }
  std::vector<std::uint8_t> out(digits.begin(), digits.end());
  for (std::size_t i = 0; i + 1 < out.size(); ++i) out[i] = static_cast<std::uint8_t>(9 - out[i]);
  out.back() = static_cast<std::uint8_t>(10 - out.back());
  return out;
}

namespace {

void append_significand_groups(std::vector<BitString>& groups, std::span<const std::uint8_t> digits) {
  BitString tetrade;
  tetrade.append_uint(digits[0], kTetradeBits);
  groups.push_back(std::move(tetrade));
  for (std::size_t i = 1; i < digits.size(); i += 3) {
    unsigned value = 0;
    for (std::size_t j = i; j < i + 3; ++j) value = value * 10 + (j < digits.size() ? digits[j] : 0U);
    BitString declet;
    declet.append_uint(value, kDecletBits);
    groups.push_back(std::move(declet));
  }
}

std::vector<std::uint8_t> stored_digits(const ScientificForm& form) {
  if (form.sign == Sign::Negative) return complement_to_ten(form.digits);
  return form.digits;
}

}  // namespace

BitString encode_significand(std::span<const std::uint8_t> digits, bool negative) {
  if (!is_canonical_significand(digits)) {
    throw std::invalid_argument("encode_significand: digits are not canonical");
  }
  std::vector<BitString> groups;
  if (negative) {
    append_significand_groups(groups, complement_to_ten(digits));
  } else {
    append_significand_groups(groups, digits);
  }
  BitString out;
  for (const auto& g : groups) out.append(g);
  return out;
}

namespace detail {

bool exponent_inverted(Sign sign, ExponentSign exponent_sign) noexcept {
  return (sign == Sign::Negative) != (exponent_sign == ExponentSign::Negative);
}

std::vector<std::uint8_t> finish_significand(std::vector<std::uint8_t> raw, bool negative,
                                             std::size_t position) {
  while (raw.size() > 1 && raw.back() == 0) raw.pop_back();
  if (!negative) {
    if (raw.front() == 0) throw DecodeError(DecodeErrorKind::SignificandOutOfRange, position);
    return raw;
  }
  // Stored value is 10 - m; it must lie in (0, 9].
  const bool is_zero = raw.size() == 1 && raw.front() == 0;
  const bool above_nine = raw.front() == 9 && raw.size() > 1;
  if (is_zero || above_nine) throw DecodeError(DecodeErrorKind::SignificandOutOfRange, position);
  return complement_to_ten(raw);
}

ScientificForm read_sign_and_exponent(BitCursor& cursor, Sign sign, std::uint64_t max_exponent) {
  const std::size_t start = cursor.position();
  const ExponentReading reading = decode_exponent(cursor);
  const bool negative_sign = sign == Sign::Negative;
  ScientificForm form;
  form.sign = sign;
  form.exponent = reading.exponent;
  form.exponent_sign =
      reading.inverted == negative_sign ? ExponentSign::NonNegative : ExponentSign::Negative;
  if (form.exponent == 0 && form.exponent_sign == ExponentSign::Negative) {
    throw DecodeError(DecodeErrorKind::NegativeZeroExponent, start);
  }
  if (form.exponent > max_exponent) {
    throw DecodeError(DecodeErrorKind::ExponentTooLarge, start);
  }
  return form;
}

}  // namespace detail

std::vector<BitString> encode_fields(const DecimalValue& value) {
  switch (value.kind()) {
    case DecimalValue::Kind::NegativeInfinity: return {BitString::from_text("00")};
    case DecimalValue::Kind::NegativeZero: return {BitString::from_text("01")};
    case DecimalValue::Kind::PositiveZero: return {BitString::from_text("10")};
    case DecimalValue::Kind::PositiveInfinity: return {BitString::from_text("11")};
    case DecimalValue::Kind::NaN: return {BitString::from_text("111")};
    case DecimalValue::Kind::Finite: break;
  }
  const ScientificForm& form = value.form();
  std::vector<BitString> groups;
  groups.reserve(3 + form.digits.size() / 3);
  groups.push_back(sign_bits(form.sign));
  groups.push_back(
      encode_exponent(form.exponent, detail::exponent_inverted(form.sign, form.exponent_sign)).bits);
  append_significand_groups(groups, stored_digits(form));
  return groups;
}

BitString encode(const DecimalValue& value, const CodecOptions& options) {
  validate(options);
  if (options.variant != Variant::Canonical) {
    throw std::invalid_argument("codec: encode() handles the canonical variant only");
  }
  const auto groups = encode_fields(value);
  BitString out;
  for (const auto& g : groups) out.append(g);
  if (options.trim_trailing_zero_bits && value.is_finite()) {
    out.trim_trailing_zeros(groups[0].size() + groups[1].size());
  }
  return out;
}

std::vector<std::uint8_t> decode_significand(BitCursor& cursor, bool negative, bool trimmed) {
  const std::size_t start = cursor.position();
  std::vector<std::uint8_t> raw;

  std::uint64_t tetrade = 0;
  if (cursor.remaining() >= kTetradeBits) {
    tetrade = cursor.read_uint(kTetradeBits);
  } else if (trimmed) {
    const auto r = static_cast<unsigned>(cursor.remaining());
    tetrade = cursor.read_uint(r) << (kTetradeBits - r);
  } else {
    throw DecodeError(DecodeErrorKind::TruncatedInput, start);
  }
  if (tetrade > 9) throw DecodeError(DecodeErrorKind::DigitOutOfRange, start);
  raw.push_back(static_cast<std::uint8_t>(tetrade));

  while (!cursor.at_end()) {
    const std::size_t at = cursor.position();
    std::uint64_t declet = 0;
    if (cursor.remaining() >= kDecletBits) {
      declet = cursor.read_uint(kDecletBits);
    } else {
      const auto r = static_cast<unsigned>(cursor.remaining());
      declet = cursor.read_uint(r);
      if (trimmed) {
        declet <<= kDecletBits - r;
      } else if (declet != 0) {
        throw DecodeError(DecodeErrorKind::TruncatedInput, at);
      } else {
        break;  // zero padding only
      }
    }
    if (declet > 999) throw DecodeError(DecodeErrorKind::DigitOutOfRange, at);
    raw.push_back(static_cast<std::uint8_t>(declet / 100));
    raw.push_back(static_cast<std::uint8_t>(declet / 10 % 10));
    raw.push_back(static_cast<std::uint8_t>(declet % 10));
  }
  return detail::finish_significand(std::move(raw), negative, start);
}

DecimalValue decode(const BitString& bits, const CodecOptions& options) {
  validate(options);
  if (options.variant != Variant::Canonical) {
    throw std::invalid_argument("codec: decode() handles the canonical variant only");
  }
  if (bits.size() < 2) throw DecodeError(DecodeErrorKind::TruncatedInput, bits.size());

  const bool first = bits[0];
  const bool second = bits[1];
  const bool only_header = bits.size() == 2;
  if (!first && second) {
    if (!only_header) throw DecodeError(DecodeErrorKind::InvalidHeader, 0);
    return DecimalValue::negative_zero();
  }
  if (first && second) {
    if (only_header) return DecimalValue::positive_infinity();
    if (bits.size() == 3 && bits[2]) return DecimalValue::nan();
    throw DecodeError(DecodeErrorKind::InvalidHeader, 0);
  }
  if (only_header) {
    return first ? DecimalValue::positive_zero() : DecimalValue::negative_infinity();
  }

  const Sign sign = first ? Sign::Positive : Sign::Negative;
  BitCursor cursor(bits, 2);
  ScientificForm form = detail::read_sign_and_exponent(cursor, sign, options.max_exponent);
  form.digits = decode_significand(cursor, sign == Sign::Negative, options.trim_trailing_zero_bits);
  return DecimalValue::finite(std::move(form));
}

std::size_t canonical_length(const ScientificForm& form) noexcept {
  const std::size_t extra = form.digits.size() - 1;
  return 2 + exponent_field_length(form.exponent) + kTetradeBits + kDecletBits * ((extra + 2) / 3);
}

}  // namespace decinf
