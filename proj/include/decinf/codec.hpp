#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "decinf/bitstring.hpp"
#include "decinf/decimal.hpp"
#include "decinf/decode_error.hpp"

/// \file
/// Order-preserving decimal codec.
///
/// A finite value is written as four concatenated fields:
///
///   S   2 bits, 00 negative / 10 positive
///   TE  exponent field (see gamma.hpp), inverted when sign != exponent sign
///   M   significand: leading digit as a 4-bit tetrade, remaining digits in
///       groups of three as 10-bit declets (last group zero-padded). Negative
///       values store the digits of 10 - m.
///
/// Specials are 2-3 bit codes: -INF 00, -0 01, +0 10, +INF 11, NaN 111.
/// Comparing encodings bit by bit, with a prefix sorting first, gives the
/// numeric order of the values.

namespace decinf {

enum class Variant : std::uint8_t { Canonical, PrefixFree, FixedWidth };

struct CodecOptions {
  /// Drop trailing zero bits (canonical variant only); the decoder re-pads.
  bool trim_trailing_zero_bits = false;
  Variant variant = Variant::Canonical;
  /// Key width for Variant::FixedWidth; a multiple of 8, at least 8.
  std::size_t width_bits = 64;
  /// Decoded exponents above this raise DecodeErrorKind::ExponentTooLarge.
  std::uint64_t max_exponent = kDefaultMaxExponent;
};

/// Throws std::invalid_argument on inconsistent options.
void validate(const CodecOptions& options);

inline constexpr std::size_t kTetradeBits = 4;
inline constexpr std::size_t kDecletBits = 10;

/// Sign bits for finite values.
BitString sign_bits(Sign sign);

/// Digits of 10 - m, same length as the input: nines' complement on every
/// digit but the last, tens' complement on the last. Self-inverse on
/// canonical significands. Requires a non-zero last digit.
std::vector<std::uint8_t> complement_to_ten(std::span<const std::uint8_t> digits);

/// Tetrade plus declets for a canonical digit sequence. With `negative` the
/// complement is encoded instead.
BitString encode_significand(std::span<const std::uint8_t> digits, bool negative);

/// The encoding split into its fields: S, TE, tetrade, then one group per
/// declet. Specials produce a single group.
std::vector<BitString> encode_fields(const DecimalValue& value);

/// Canonical encoding, optionally bit-trimmed. Rejects non-canonical variants
/// (see variants.hpp for those).
BitString encode(const DecimalValue& value, const CodecOptions& options = {});

/// Reads the significand from `cursor` to the end of input and returns the
/// canonical digits of m. With `trimmed`, short trailing groups are zero-padded
/// instead of rejected.
std::vector<std::uint8_t> decode_significand(BitCursor& cursor, bool negative, bool trimmed = false);

/// Exact inverse of encode() on its image. Throws DecodeError.
DecimalValue decode(const BitString& bits, const CodecOptions& options = {});

/// Canonical bit length of a finite form:
/// 2 + (2*floor(log2(e+2)) + 1) + 4 + 10*ceil((digits-1)/3).
std::size_t canonical_length(const ScientificForm& form) noexcept;

namespace detail {

/// Shared validation for decoded significands: strips padding zeros and
/// applies the complement. `position` is reported in errors.
std::vector<std::uint8_t> finish_significand(std::vector<std::uint8_t> raw, bool negative,
                                             std::size_t position);

/// Whether a finite value with this sign stores an inverted exponent field.
bool exponent_inverted(Sign sign, ExponentSign exponent_sign) noexcept;

/// Reads S-relative exponent state; positions cursor at M. Shared with the
/// prefix-free decoder.
ScientificForm read_sign_and_exponent(BitCursor& cursor, Sign sign, std::uint64_t max_exponent);

}  // namespace detail

}  // namespace decinf
