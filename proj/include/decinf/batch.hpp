#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "decinf/bitstring.hpp"
#include "decinf/codec.hpp"
#include "decinf/decimal.hpp"

/// \file
/// Bulk kernels over many values. Each parallel kernel (OpenMP) has a
/// `_serial` reference that produces identical output; tests compare the two
/// and the benchmark target times them.

namespace decinf::batch {

std::vector<BitString> encode_all(std::span<const DecimalValue> values, const CodecOptions& options = {});
std::vector<BitString> encode_all_serial(std::span<const DecimalValue> values,
                                         const CodecOptions& options = {});

/// Rethrows the DecodeError of the lowest failing index.
std::vector<DecimalValue> decode_all(std::span<const BitString> encodings, const CodecOptions& options = {});
std::vector<DecimalValue> decode_all_serial(std::span<const BitString> encodings,
                                            const CodecOptions& options = {});

/// Stable permutation that sorts `encodings` in full lexicographic order.
std::vector<std::size_t> sort_permutation(std::span<const BitString> encodings);

/// Encodes then sorts by encoding only; never compares values numerically.
std::vector<std::size_t> sort_by_encoding(std::span<const DecimalValue> values,
                                          const CodecOptions& options = {});
std::vector<std::size_t> sort_by_encoding_serial(std::span<const DecimalValue> values,
                                                 const CodecOptions& options = {});

/// Number of adjacent pairs (i, i+1) where the encoding order disagrees with
/// compare_total on `values` (sorted or not).
std::size_t count_adjacent_order_mismatches(std::span<const DecimalValue> values,
                                            std::span<const BitString> encodings);
std::size_t count_adjacent_order_mismatches_serial(std::span<const DecimalValue> values,
                                                   std::span<const BitString> encodings);

}  // namespace decinf::batch
