#pragma once

// Test-only reference encoder. Works on decimal text with string arithmetic
// (long subtraction for 10 - m, std::bitset for binary digits) and shares no
// code with the library's encoder.

#include <bitset>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oracle {

inline std::string binary(std::uint64_t v) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('0' + (v & 1)));
    v >>= 1;
  } while (v != 0);
  return s;
}

// 10 - m where m = d0.d1d2... (k digits), by grade-school subtraction of the
// integers 10^k and m*10^(k-1); returns k digits.
inline std::string ten_minus(const std::string& m) {
  std::string minuend = "1" + std::string(m.size(), '0');
  std::string subtrahend = std::string(minuend.size() - m.size(), '0') + m;
  std::string out(minuend.size(), '0');
  int borrow = 0;
  for (std::size_t i = minuend.size(); i-- > 0;) {
    int d = (minuend[i] - '0') - (subtrahend[i] - '0') - borrow;
    borrow = d < 0;
    if (d < 0) d += 10;
    out[i] = static_cast<char>('0' + d);
  }
  if (out.front() != '0') throw std::logic_error("ten_minus: m < 1");
  return out.substr(1);
}

// Grouped encoding ("S TE tetrade declet...") of plain decimal text such as
// "-103.2", "0.0405" or "12e5".
inline std::string encode(std::string text) {
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.erase(0, 1);
  }
  long long written_exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
    written_exponent = std::stoll(text.substr(e + 1));
    text.erase(e);
  }
  std::size_t point = text.find('.');
  if (point == std::string::npos) point = text.size();
  std::string digits = text;
  if (point < digits.size()) digits.erase(point, 1);

  const std::size_t first = digits.find_first_not_of('0');
  if (first == std::string::npos) return negative ? "01" : "10";
  const std::size_t last = digits.find_last_not_of('0');
  const long long exponent = static_cast<long long>(point) - 1 - static_cast<long long>(first) + written_exponent;
  std::string m = digits.substr(first, last - first + 1);

  const bool exponent_negative = exponent < 0;
  const std::uint64_t magnitude = static_cast<std::uint64_t>(exponent_negative ? -exponent : exponent);
  const std::string offset = binary(magnitude + 2);
  std::string te = std::string(offset.size() - 1, '1') + "0" + offset.substr(1);
  if (negative != exponent_negative) {
    for (char& c : te) c = c == '0' ? '1' : '0';
  }

  if (negative) m = ten_minus(m);
  std::string rest = m.substr(1);
  while (rest.size() % 3 != 0) rest.push_back('0');

  std::string out = negative ? "00" : "10";
  out += " " + te;
  out += " " + std::bitset<4>(static_cast<unsigned long>(m[0] - '0')).to_string();
  for (std::size_t i = 0; i < rest.size(); i += 3) {
    out += " " + std::bitset<10>(std::stoul(rest.substr(i, 3))).to_string();
  }
  return out;
}

inline std::string strip_spaces(std::string s) {
  std::erase(s, ' ');
  return s;
}

}  // namespace oracle
