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
/// Growable bit sequence with the two bit-sequence orders (full lexicographic
/// and shortlex) and an MSB-first byte packing.

namespace decinf {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bits are packed MSB-first into bytes. Bits past size() are always zero, so
/// equal-length strings compare bytewise exactly as they compare bitwise.
class BitString {
 public:
  BitString() = default;

  /// Accepts '0' and '1'; spaces are ignored so grouped figure strings can be
  /// pasted directly. Throws FormatError on any other character.
  static BitString from_text(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] bool empty() const noexcept { return size_ == 0; }
  [[nodiscard]] bool operator[](std::size_t index) const noexcept {
    return (bytes_[index >> 3] >> (7 - (index & 7))) & 1U;
  }
  [[nodiscard]] std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

  void push_back(bool bit);
  /// Appends the low `width` bits of `value`, most significant first.
  void append_uint(std::uint64_t value, unsigned width);
  void append_run(bool bit, std::size_t count);
  void append(const BitString& other);
  void reserve(std::size_t bits) { bytes_.reserve((bits + 7) / 8); }

  /// Flips every bit in [begin, size()).
  void invert_from(std::size_t begin) noexcept;
  /// Drops trailing zero bits while size() > min_size.
  void trim_trailing_zeros(std::size_t min_size = 0) noexcept;
  void resize(std::size_t bits);

  [[nodiscard]] std::string to_text() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  void clear_padding() noexcept;

  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

/// `target` extended on the right by `bits`.
BitString append_bits(BitString target, const BitString& bits);

/// Full lexicographic order; a strict prefix sorts before its extensions.
std::strong_ordering lex_compare(const BitString& a, const BitString& b) noexcept;

/// Length first, then lexicographic within a length.
std::strong_ordering shortlex_compare(const BitString& a, const BitString& b) noexcept;

struct PackedBits {
  std::vector<std::uint8_t> bytes;
  std::size_t bit_length = 0;

  friend bool operator==(const PackedBits&, const PackedBits&) = default;
};

PackedBits to_bytes(const BitString& bits);

/// Inverse of to_bytes. Throws FormatError when `bit_length` does not fit the
/// bytes (or leaves a whole unused byte) or when padding bits are non-zero.
BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_length);

/// Renders `groups` as '0'/'1' text separated by single spaces; empty groups
/// are skipped.
std::string join_groups(std::span<const BitString> groups);

/// Hex byte text with bit length, e.g. "A1 00/9".
std::string to_hex_text(const PackedBits& packed);
/// Parses the to_hex_text form; whitespace between bytes is optional.
PackedBits parse_hex_text(std::string_view text);

/// Left-to-right reader over a BitString. The cursor holds a reference; the
/// source must outlive it.
class BitCursor {
 public:
  explicit BitCursor(const BitString& source, std::size_t position = 0);

  [[nodiscard]] std::size_t position() const noexcept { return position_; }
  [[nodiscard]] std::size_t remaining() const noexcept { return source_->size() - position_; }
  [[nodiscard]] bool at_end() const noexcept { return position_ == source_->size(); }
  [[nodiscard]] const BitString& source() const noexcept { return *source_; }

  /// Throws std::out_of_range past the end.
  [[nodiscard]] bool peek() const;
  bool read_bit();
  /// Reads `width` (<= 64) bits MSB-first. Throws std::out_of_range if fewer
  /// remain.
  std::uint64_t read_uint(unsigned width);
  void skip(std::size_t count);

 private:
  const BitString* source_;
  std::size_t position_;
};

}  // namespace decinf
