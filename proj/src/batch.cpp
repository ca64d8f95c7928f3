#include "decinf/batch.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "decinf/variants.hpp"

namespace decinf::batch {

namespace {

using Index = std::ptrdiff_t;

Index ssize_of(std::size_t n) { return static_cast<Index>(n); }

int sign_of(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

std::vector<BitString> encode_all(std::span<const DecimalValue> values, const CodecOptions& options) {
  validate(options);
  std::vector<BitString> out(values.size());
  std::vector<std::exception_ptr> errors(values.size());
  const Index n = ssize_of(values.size());
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) {
    try {
      out[i] = encode_with(values[i], options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<BitString> encode_all_serial(std::span<const DecimalValue> values,
                                         const CodecOptions& options) {
  std::vector<BitString> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(encode_with(v, options));
  return out;
}

std::vector<DecimalValue> decode_all(std::span<const BitString> encodings, const CodecOptions& options) {
  validate(options);
  std::vector<DecimalValue> out(encodings.size());
  std::vector<std::exception_ptr> errors(encodings.size());
  const Index n = ssize_of(encodings.size());
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) {
    try {
      out[i] = decode_with(encodings[i], options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<DecimalValue> decode_all_serial(std::span<const BitString> encodings,
                                            const CodecOptions& options) {
  std::vector<DecimalValue> out;
  out.reserve(encodings.size());
  for (const auto& bits : encodings) out.push_back(decode_with(bits, options));
  return out;
}

std::vector<std::size_t> sort_permutation(std::span<const BitString> encodings) {
  std::vector<std::size_t> order(encodings.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_compare(encodings[a], encodings[b]) < 0;
  });
  return order;
}

std::vector<std::size_t> sort_by_encoding(std::span<const DecimalValue> values, const CodecOptions& options) {
  const auto encodings = encode_all(values, options);
  return sort_permutation(encodings);
}

std::vector<std::size_t> sort_by_encoding_serial(std::span<const DecimalValue> values,
                                                 const CodecOptions& options) {
  const auto encodings = encode_all_serial(values, options);
  return sort_permutation(encodings);
}

std::size_t count_adjacent_order_mismatches(std::span<const DecimalValue> values,
                                            std::span<const BitString> encodings) {
  const Index pairs = values.size() < 2 ? 0 : ssize_of(values.size() - 1);
  std::size_t mismatches = 0;
#pragma omp parallel for schedule(static) reduction(+ : mismatches)
  for (Index i = 0; i < pairs; ++i) {
    const int numeric = sign_of(compare_total(values[i], values[i + 1]));
    const int bits = sign_of(lex_compare(encodings[i], encodings[i + 1]));
    if (numeric != bits) ++mismatches;
  }
  return mismatches;
}

std::size_t count_adjacent_order_mismatches_serial(std::span<const DecimalValue> values,
                                                   std::span<const BitString> encodings) {
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (sign_of(compare_total(values[i], values[i + 1])) !=
        sign_of(lex_compare(encodings[i], encodings[i + 1]))) {
      ++mismatches;
    }
  }
  return mismatches;
}

}  // namespace decinf::batch
