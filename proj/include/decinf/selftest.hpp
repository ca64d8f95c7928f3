#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "decinf/bitstring.hpp"
#include "decinf/decimal.hpp"

/// \file
/// Seeded property suite over the canonical codec. Each case draws a pair of
/// values; results are identical for a given seed whether or not the cases
/// run in parallel. The first violation per property is shrunk to a smaller
/// counterexample before being reported.

namespace decinf {

using EncodeFn = std::function<BitString(const DecimalValue&)>;
using DecodeFn = std::function<DecimalValue(const BitString&)>;

struct SelfTestConfig {
  std::uint64_t cases = 100'000;
  std::uint64_t seed = 42;
  bool parallel = true;
  /// Defaults to the canonical codec. Overriding lets tests check that a
  /// broken codec is caught.
  EncodeFn encoder;
  DecodeFn decoder;
};

struct PropertyFailure {
  std::string property;
  std::uint64_t case_index = 0;
  /// Shrunk counterexample, rendered as decimal text.
  std::vector<std::string> counterexample;
  std::string detail;
};

struct SelfTestReport {
  std::uint64_t cases = 0;
  std::vector<PropertyFailure> failures;

  [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

SelfTestReport run_selftest(const SelfTestConfig& config);

/// Names accepted by make_mutant.
std::vector<std::string> mutant_names();

/// A deliberately broken encoder for negative-control runs. Throws
/// std::invalid_argument for an unknown name.
EncodeFn make_mutant(const std::string& name);

}  // namespace decinf
