#include "decinf/gamma.hpp"

#include <bit>
#include <limits>

#include "decinf/decode_error.hpp"

namespace decinf {

BitString modified_gamma_encode(std::uint64_t k) {
  if (k < 1) throw std::domain_error("modified gamma: k must be >= 1");
  const auto width = static_cast<unsigned>(std::bit_width(k));
  BitString out;
  out.reserve(2 * width - 1);
  out.append_run(true, width - 1);
  out.push_back(false);
  out.append_uint(k, width - 1);  // drops the leading 1
  return out;
}

namespace {

// Reads the codeword whose leading run is made of `run_bit`; payload bits are
// XORed with `flip`. Shared by the plain and inverted readers.
std::uint64_t read_gamma(BitCursor& cursor, bool run_bit, bool flip) {
  const std::size_t start = cursor.position();
  std::size_t run = 0;
  while (true) {
    if (cursor.at_end()) throw DecodeError(DecodeErrorKind::TruncatedInput, start);
    if (cursor.read_bit() != run_bit) break;
    ++run;
  }
  if (run > 62) throw DecodeError(DecodeErrorKind::ExponentTooLarge, start);
  if (cursor.remaining() < run) throw DecodeError(DecodeErrorKind::TruncatedInput, start);
  std::uint64_t payload = cursor.read_uint(static_cast<unsigned>(run));
  if (flip) payload ^= (std::uint64_t{1} << run) - 1;
  return (std::uint64_t{1} << run) | payload;
}

}  // namespace

std::uint64_t modified_gamma_decode(BitCursor& cursor) {
  return read_gamma(cursor, true, false);
}

ExponentField encode_exponent(std::uint64_t exponent, bool invert) {
  if (exponent > std::numeric_limits<std::uint64_t>::max() - 2) {
    throw std::domain_error("exponent field: exponent too large");
  }
  ExponentField field{modified_gamma_encode(exponent + 2), exponent, invert};
  if (invert) field.bits.invert_from(0);
  return field;
}

ExponentReading decode_exponent(BitCursor& cursor) {
  const std::size_t start = cursor.position();
  if (cursor.at_end()) throw DecodeError(DecodeErrorKind::TruncatedInput, start);
  const bool leading = cursor.peek();
  const bool inverted = !leading;
  const std::uint64_t offset = read_gamma(cursor, leading, inverted);
  // offset >= 2 by construction: the run is at least one bit long.
  if (offset < 2) throw DecodeError(DecodeErrorKind::InvalidHeader, start);
  return {offset - 2, inverted};
}

std::size_t exponent_field_length(std::uint64_t exponent) noexcept {
  const auto width = static_cast<std::size_t>(std::bit_width(exponent + 2));
  return 2 * width - 1;
}

}  // namespace decinf
