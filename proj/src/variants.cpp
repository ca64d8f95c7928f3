#include "decinf/variants.hpp"

#include "decinf/decode_error.hpp"
#include "decinf/gamma.hpp"

namespace decinf {

std::vector<BitString> encode_prefix_free_fields(const DecimalValue& value) {
  std::vector<BitString> fields = encode_fields(value);
  if (!value.is_finite()) return fields;

  // fields: S, TE, tetrade, declet...
  std::vector<BitString> out;
  out.reserve(fields.size() * 2);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out.push_back(std::move(fields[i]));
    if (i >= 2) {
      BitString more;
      more.push_back(i + 1 < fields.size());
      out.push_back(std::move(more));
    }
  }
  return out;
}

BitString encode_prefix_free(const DecimalValue& value) {
  BitString out;
  for (const auto& f : encode_prefix_free_fields(value)) out.append(f);
  return out;
}

namespace {

std::uint64_t read_group(BitCursor& cursor, std::size_t width, std::size_t group_start) {
  // group plus its continuation bit
  if (cursor.remaining() < width + 1) {
    throw DecodeError(DecodeErrorKind::TruncatedInput, group_start);
  }
  return cursor.read_uint(static_cast<unsigned>(width));
}

DecimalValue decode_one_prefix_free(BitCursor& cursor, std::uint64_t max_exponent) {
  const std::size_t start = cursor.position();
  if (cursor.remaining() < 2) throw DecodeError(DecodeErrorKind::TruncatedInput, start);
  const bool first = cursor.read_bit();
  const bool second = cursor.read_bit();

  if (!first && second) return DecimalValue::negative_zero();
  if (first && second) {
    if (!cursor.at_end() && cursor.peek()) {
      cursor.skip(1);
      return DecimalValue::nan();
    }
    return DecimalValue::positive_infinity();
  }
  if (cursor.at_end()) {
    return first ? DecimalValue::positive_zero() : DecimalValue::negative_infinity();
  }

  const Sign sign = first ? Sign::Positive : Sign::Negative;
  ScientificForm form = detail::read_sign_and_exponent(cursor, sign, max_exponent);

  const std::size_t significand_start = cursor.position();
  std::vector<std::uint8_t> raw;
  const std::uint64_t tetrade = read_group(cursor, kTetradeBits, significand_start);
  if (tetrade > 9) throw DecodeError(DecodeErrorKind::DigitOutOfRange, significand_start);
  raw.push_back(static_cast<std::uint8_t>(tetrade));
  while (cursor.read_bit()) {
    const std::size_t at = cursor.position();
    const std::uint64_t declet = read_group(cursor, kDecletBits, at);
    if (declet > 999) throw DecodeError(DecodeErrorKind::DigitOutOfRange, at);
    raw.push_back(static_cast<std::uint8_t>(declet / 100));
    raw.push_back(static_cast<std::uint8_t>(declet / 10 % 10));
    raw.push_back(static_cast<std::uint8_t>(declet % 10));
  }
  form.digits = detail::finish_significand(std::move(raw), sign == Sign::Negative, significand_start);
  return DecimalValue::finite(std::move(form));
}

}  // namespace

std::vector<DecimalValue> decode_prefix_free_stream(BitCursor& cursor, std::uint64_t max_exponent) {
  std::vector<DecimalValue> out;
  while (!cursor.at_end()) out.push_back(decode_one_prefix_free(cursor, max_exponent));
  return out;
}

FixedWidthKey fixed_width_key(const DecimalValue& value, std::size_t width_bits) {
  CodecOptions options;
  options.variant = Variant::FixedWidth;
  options.width_bits = width_bits;
  validate(options);

  BitString bits = encode(value);
  if (value.is_finite()) {
    const std::size_t needed = 2 + exponent_field_length(value.form().exponent) + kTetradeBits;
    if (needed > width_bits) {
      throw RangeError("fixed width: " + std::to_string(width_bits) + " bits cannot hold the " +
                       std::to_string(needed) + "-bit sign, exponent and leading digit");
    }
  }
  FixedWidthKey key;
  key.width_bits = width_bits;
  key.truncated = bits.size() > width_bits;
  bits.resize(width_bits);
  key.bytes.assign(bits.bytes().begin(), bits.bytes().end());
  return key;
}

DecimalValue decode_fixed_width_key(const FixedWidthKey& key, std::uint64_t max_exponent) {
  BitString bits = from_bytes(key.bytes, key.width_bits);
  bits.trim_trailing_zeros(2);
  CodecOptions options;
  options.trim_trailing_zero_bits = true;
  options.max_exponent = max_exponent;
  return decode(bits, options);
}

BitString encode_with(const DecimalValue& value, const CodecOptions& options) {
  validate(options);
  switch (options.variant) {
    case Variant::Canonical: return encode(value, options);
    case Variant::PrefixFree: return encode_prefix_free(value);
    case Variant::FixedWidth: {
      const FixedWidthKey key = fixed_width_key(value, options.width_bits);
      return from_bytes(key.bytes, key.width_bits);
    }
  }
  throw std::invalid_argument("codec: unknown variant");
}

DecimalValue decode_with(const BitString& bits, const CodecOptions& options) {
  validate(options);
  switch (options.variant) {
    case Variant::Canonical: return decode(bits, options);
    case Variant::PrefixFree: {
      BitCursor cursor(bits);
      DecimalValue value = decode_one_prefix_free(cursor, options.max_exponent);
      if (!cursor.at_end()) throw DecodeError(DecodeErrorKind::InvalidHeader, cursor.position());
      return value;
    }
    case Variant::FixedWidth: {
      if (bits.size() != options.width_bits) {
        throw DecodeError(DecodeErrorKind::TruncatedInput, bits.size());
      }
      const PackedBits packed = to_bytes(bits);
      return decode_fixed_width_key(FixedWidthKey{packed.bytes, options.width_bits, false},
                                    options.max_exponent);
    }
  }
  throw std::invalid_argument("codec: unknown variant");
}

}  // namespace decinf
