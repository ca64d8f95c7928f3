// Parallel batch kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "decinf/batch.hpp"
#include "decinf/sampling.hpp"

namespace {

std::vector<decinf::DecimalValue> make_values(std::size_t n) {
  std::mt19937_64 rng(1);
  std::vector<decinf::DecimalValue> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) values.push_back(decinf::random_finite(rng, {34, 6144}));
  return values;
}

template <auto Kernel>
void BM_encode(benchmark::State& state) {
  const auto values = make_values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(values, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_decode(benchmark::State& state) {
  const auto encoded = decinf::batch::encode_all_serial(make_values(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(encoded, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_sort(benchmark::State& state) {
  const auto values = make_values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(values, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_encode<decinf::batch::encode_all>)->Name("encode/parallel")->Range(1 << 10, 1 << 16);
BENCHMARK(BM_encode<decinf::batch::encode_all_serial>)->Name("encode/serial")->Range(1 << 10, 1 << 16);
BENCHMARK(BM_decode<decinf::batch::decode_all>)->Name("decode/parallel")->Range(1 << 10, 1 << 16);
BENCHMARK(BM_decode<decinf::batch::decode_all_serial>)->Name("decode/serial")->Range(1 << 10, 1 << 16);
BENCHMARK(BM_sort<decinf::batch::sort_by_encoding>)->Name("sort/parallel")->Range(1 << 10, 1 << 16);
BENCHMARK(BM_sort<decinf::batch::sort_by_encoding_serial>)->Name("sort/serial")->Range(1 << 10, 1 << 16);

BENCHMARK_MAIN();
