#include <benchmark/benchmark.h>

#include "parahull/iq.hpp"
#include "parahull/matrix.hpp"

using namespace parahull;

static void BM_IqDivmod(benchmark::State& state) {
  Iq a(IntPoly({Int(1), Int(0), Int(1)}));
  Iq b(IntPoly({Int(0), Int(2)}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iq_divmod(a, b));
  }
}
BENCHMARK(BM_IqDivmod);

static void BM_IqGcd(benchmark::State& state) {
  Iq s = Iq::variable();
  Iq t(IntPoly::linear(Int(1), Int(2)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iq_gcd(s, t));
  }
}
BENCHMARK(BM_IqGcd);

static void BM_HnfInt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IntMatrix m(n, n);
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      seed = seed * 6364136223846793005ull + 1442695040888963407ull;
      m.at(i, j) = Int(static_cast<long>(seed % 101) - 50);
    }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnf_int(m));
  }
}
BENCHMARK(BM_HnfInt)->Arg(3)->Arg(5)->Arg(8);

BENCHMARK_MAIN();
