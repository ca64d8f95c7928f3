#pragma once

#include <cstdint>

#include "decinf/bitstring.hpp"

/// \file
/// Order-preserving variant of the Elias gamma code and the exponent field
/// built on it.
///
/// For k with an N-bit binary form, the codeword is N-1 ones, a zero, then the
/// low N-1 bits of k (2N-1 bits total). Codewords of larger integers start
/// with longer runs of ones, so full lexicographic order on codewords equals
/// numeric order, and the run length delimits the codeword.

namespace decinf {

/// Throws std::domain_error when k < 1.
BitString modified_gamma_encode(std::uint64_t k);

/// Reads one codeword. Throws DecodeError (TruncatedInput) if the input ends
/// inside it, or (ExponentTooLarge) if the value would not fit 64 bits.
std::uint64_t modified_gamma_decode(BitCursor& cursor);

struct ExponentField {
  /// T followed by E: the gamma code of exponent + 2, inverted when `inverted`.
  BitString bits;
  std::uint64_t exponent = 0;
  bool inverted = false;
};

/// Throws std::domain_error when exponent + 2 overflows.
ExponentField encode_exponent(std::uint64_t exponent, bool invert);

struct ExponentReading {
  std::uint64_t exponent = 0;
  bool inverted = false;
};

/// Reads a T+E field starting at the T bit. The field spans 2R+1 bits where R
/// is the run of identical bits at its start; a leading 0 marks inversion.
ExponentReading decode_exponent(BitCursor& cursor);

/// Length of the exponent field for `exponent`: 2*floor(log2(exponent+2))+1.
std::size_t exponent_field_length(std::uint64_t exponent) noexcept;

}  // namespace decinf
