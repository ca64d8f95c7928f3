#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "decinf/bitstring.hpp"
#include "decinf/codec.hpp"
#include "decinf/decimal.hpp"

/// \file
/// Self-delimiting and fixed-width forms of the canonical encoding.

namespace decinf {

/// Canonical encoding with a continuation bit after the tetrade and after
/// every declet: 1 when another declet follows, 0 after the last one.
/// Specials and zeros are unchanged.
BitString encode_prefix_free(const DecimalValue& value);

/// Same layout as encode_prefix_free, split into printable groups.
std::vector<BitString> encode_prefix_free_fields(const DecimalValue& value);

/// Decodes consecutive prefix-free encodings until the input is exhausted.
///
/// Finite values delimit themselves. The special codes do not: "00" and "10"
/// are read as -INF and +0 only at the end of the input, and "11" is read as
/// NaN when the next bit is 1, as +INF otherwise.
std::vector<DecimalValue> decode_prefix_free_stream(BitCursor& cursor,
                                                    std::uint64_t max_exponent = kDefaultMaxExponent);

class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// A canonical encoding cut or zero-padded to a fixed number of bytes.
/// Bytewise comparison of two keys of the same width follows numeric order
/// (non-strictly once truncation has happened).
struct FixedWidthKey {
  std::vector<std::uint8_t> bytes;
  std::size_t width_bits = 0;
  /// True when encoding bits had to be dropped to fit.
  bool truncated = false;

  friend std::strong_ordering operator<=>(const FixedWidthKey& a, const FixedWidthKey& b) noexcept {
    return std::lexicographical_compare_three_way(a.bytes.begin(), a.bytes.end(), b.bytes.begin(),
                                                  b.bytes.end());
  }
  friend bool operator==(const FixedWidthKey& a, const FixedWidthKey& b) noexcept {
    return a.bytes == b.bytes;
  }
};

/// Throws std::invalid_argument for a bad width and RangeError when the sign,
/// exponent field and leading digit do not fit in `width_bits`.
FixedWidthKey fixed_width_key(const DecimalValue& value, std::size_t width_bits);

/// Best-effort inverse of fixed_width_key. Exact when the key was not
/// truncated; otherwise returns the value the kept prefix denotes.
DecimalValue decode_fixed_width_key(const FixedWidthKey& key,
                                    std::uint64_t max_exponent = kDefaultMaxExponent);

/// Encodes with whichever variant `options` selects. FixedWidth keys come back
/// as their `width_bits` bits.
BitString encode_with(const DecimalValue& value, const CodecOptions& options);

/// Decodes a single value with whichever variant `options` selects. For the
/// prefix-free variant the input must hold exactly one value.
DecimalValue decode_with(const BitString& bits, const CodecOptions& options);

}  // namespace decinf
