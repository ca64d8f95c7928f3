#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "decinf/decimal.hpp"

namespace decinf {

struct RandomDecimalSpec {
  std::size_t max_digits = 60;
  std::uint64_t max_exponent = 1'000'000;
};

/// Uniform sign and exponent sign; exponent drawn log-uniformly so small and
/// large magnitudes both appear; 1..max_digits canonical digits.
DecimalValue random_finite(std::mt19937_64& rng, const RandomDecimalSpec& spec = {});

/// Generator for case `index` of a seeded run. Independent of the order in
/// which cases are evaluated.
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index);

/// The five special values plus -0 and +0: -INF, -0, +0, +INF, NaN.
std::vector<DecimalValue> special_values();

/// Every finite value with at most two significant digits, exponent in
/// [0, max_exponent], both signs and both exponent signs.
std::vector<DecimalValue> small_grid(std::uint64_t max_exponent = 12);

}  // namespace decinf
