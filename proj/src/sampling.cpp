#include "decinf/sampling.hpp"

#include <cmath>

namespace decinf {

DecimalValue random_finite(std::mt19937_64& rng, const RandomDecimalSpec& spec) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> length(1, spec.max_digits);
  std::uniform_int_distribution<int> lead(1, 9);
  std::uniform_int_distribution<int> any(0, 9);
  std::uniform_real_distribution<double> log_exponent(0.0, std::log1p(static_cast<double>(spec.max_exponent)));

  ScientificForm form;
  form.sign = coin(rng) ? Sign::Negative : Sign::Positive;
  form.exponent = std::min<std::uint64_t>(
      spec.max_exponent, static_cast<std::uint64_t>(std::expm1(log_exponent(rng))));
  form.exponent_sign = (form.exponent != 0 && coin(rng)) ? ExponentSign::Negative : ExponentSign::NonNegative;

  const std::size_t n = length(rng);
  form.digits.assign(1, static_cast<std::uint8_t>(lead(rng)));
  for (std::size_t i = 1; i < n; ++i) form.digits.push_back(static_cast<std::uint8_t>(any(rng)));
  if (n > 1 && form.digits.back() == 0) form.digits.back() = static_cast<std::uint8_t>(lead(rng));
  return DecimalValue::finite(std::move(form));
}

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::vector<DecimalValue> special_values() {
  return {DecimalValue::negative_infinity(), DecimalValue::negative_zero(), DecimalValue::positive_zero(),
          DecimalValue::positive_infinity(), DecimalValue::nan()};
}

std::vector<DecimalValue> small_grid(std::uint64_t max_exponent) {
  std::vector<std::vector<std::uint8_t>> significands;
  for (std::uint8_t a = 1; a <= 9; ++a) {
    significands.push_back({a});
    for (std::uint8_t b = 1; b <= 9; ++b) significands.push_back({a, b});
  }

  std::vector<DecimalValue> out;
  for (Sign s : {Sign::Negative, Sign::Positive}) {
    for (ExponentSign t : {ExponentSign::Negative, ExponentSign::NonNegative}) {
      for (std::uint64_t e = 0; e <= max_exponent; ++e) {
        if (e == 0 && t == ExponentSign::Negative) continue;
        for (const auto& digits : significands) {
          out.push_back(DecimalValue::finite(ScientificForm{s, t, e, digits}));
        }
      }
    }
  }
  return out;
}

}  // namespace decinf
