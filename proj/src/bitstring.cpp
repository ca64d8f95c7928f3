#include "decinf/bitstring.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

namespace decinf {

BitString BitString::from_text(std::string_view text) {
  BitString out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(c == '1');
    } else if (c != ' ') {
      throw FormatError(std::string("bit text: unexpected character '") + c + "'");
    }
  }
  return out;
}

void BitString::push_back(bool bit) {
  if ((size_ & 7) == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80U >> (size_ & 7));
  ++size_;
}

void BitString::append_uint(std::uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) {
    push_back(((value >> i) & 1U) != 0);
  }
}

void BitString::append_run(bool bit, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) push_back(bit);
}

void BitString::append(const BitString& other) {
  if ((size_ & 7) == 0) {
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    size_ += other.size_;
    return;
  }
  for (std::size_t i = 0; i < other.size_; ++i) push_back(other[i]);
}

void BitString::invert_from(std::size_t begin) noexcept {
  for (std::size_t i = begin; i < size_; ++i) {
    bytes_[i >> 3] ^= static_cast<std::uint8_t>(0x80U >> (i & 7));
  }
}

void BitString::trim_trailing_zeros(std::size_t min_size) noexcept {
  std::size_t n = size_;
  while (n > min_size && !(*this)[n - 1]) --n;
  size_ = n;
  bytes_.resize((n + 7) / 8);
}

void BitString::resize(std::size_t bits) {
  size_ = bits;
  bytes_.resize((bits + 7) / 8, 0);
  clear_padding();
}

void BitString::clear_padding() noexcept {
  if ((size_ & 7) != 0) {
    bytes_.back() &= static_cast<std::uint8_t>(0xFF00U >> (size_ & 7));
  }
}

std::string BitString::to_text() const {
  std::string out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back((*this)[i] ? '1' : '0');
  return out;
}

BitString append_bits(BitString target, const BitString& bits) {
  target.append(bits);
  return target;
}

std::strong_ordering lex_compare(const BitString& a, const BitString& b) noexcept {
  const std::size_t common = std::min(a.size(), b.size());
  const std::size_t whole = common / 8;
  if (whole > 0) {
    const int c = std::memcmp(a.bytes().data(), b.bytes().data(), whole);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (const std::size_t rest = common & 7; rest != 0) {
    const auto mask = static_cast<std::uint8_t>(0xFF00U >> rest);
    const auto x = static_cast<std::uint8_t>(a.bytes()[whole] & mask);
    const auto y = static_cast<std::uint8_t>(b.bytes()[whole] & mask);
    if (x != y) return x <=> y;
  }
  return a.size() <=> b.size();
}

std::strong_ordering shortlex_compare(const BitString& a, const BitString& b) noexcept {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return lex_compare(a, b);
}

PackedBits to_bytes(const BitString& bits) {
  return PackedBits{{bits.bytes().begin(), bits.bytes().end()}, bits.size()};
}

BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_length) {
  if (bit_length > bytes.size() * 8 || (bit_length + 7) / 8 != bytes.size()) {
    throw FormatError("packed bits: bit length " + std::to_string(bit_length) +
                      " does not match " + std::to_string(bytes.size()) + " bytes");
  }
  BitString out;
  out.reserve(bit_length);
  for (std::size_t i = 0; i < bit_length; ++i) {
    out.push_back(((bytes[i >> 3] >> (7 - (i & 7))) & 1U) != 0);
  }
  if ((bit_length & 7) != 0) {
    const auto pad_mask = static_cast<std::uint8_t>(0xFFU >> (bit_length & 7));
    if ((bytes.back() & pad_mask) != 0) {
      throw FormatError("packed bits: non-zero padding bits");
    }
  }
  return out;
}

std::string join_groups(std::span<const BitString> groups) {
  std::string out;
  for (const BitString& g : groups) {
    if (g.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += g.to_text();
  }
  return out;
}

std::string to_hex_text(const PackedBits& packed) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (std::size_t i = 0; i < packed.bytes.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out.push_back(kHex[packed.bytes[i] >> 4]);
    out.push_back(kHex[packed.bytes[i] & 0xF]);
  }
  out.push_back('/');
  out += std::to_string(packed.bit_length);
  return out;
}

PackedBits parse_hex_text(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw FormatError("hex bits: missing '/<bit length>' suffix");
  }
  std::string digits;
  for (char c : text.substr(0, slash)) {
    if (std::isxdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
    } else if (c != ' ' && c != ':') {
      throw FormatError(std::string("hex bits: unexpected character '") + c + "'");
    }
  }
  if (digits.size() % 2 != 0) throw FormatError("hex bits: odd number of hex digits");

  PackedBits out;
  for (std::size_t i = 0; i < digits.size(); i += 2) {
    out.bytes.push_back(static_cast<std::uint8_t>(std::stoul(digits.substr(i, 2), nullptr, 16)));
  }
  const std::string_view len = text.substr(slash + 1);
  if (len.empty() || !std::all_of(len.begin(), len.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      len.size() > 18) {
    throw FormatError("hex bits: malformed bit length");
  }
  out.bit_length = std::stoull(std::string(len));
  return out;
}

BitCursor::BitCursor(const BitString& source, std::size_t position)
    : source_{&source}, position_{position} {
  if (position > source.size()) throw std::out_of_range("bit cursor: position past end");
}

bool BitCursor::peek() const {
  if (at_end()) throw std::out_of_range("bit cursor: read past end");
  return (*source_)[position_];
}

bool BitCursor::read_bit() {
  const bool bit = peek();
  ++position_;
  return bit;
}

std::uint64_t BitCursor::read_uint(unsigned width) {
  if (width > 64 || width > remaining()) throw std::out_of_range("bit cursor: read past end");
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | static_cast<std::uint64_t>((*source_)[position_ + i]);
  position_ += width;
  return v;
}

void BitCursor::skip(std::size_t count) {
  if (count > remaining()) throw std::out_of_range("bit cursor: skip past end");
  position_ += count;
}

}  // namespace decinf
