#include <hsc/canonical.hpp>
#include <hsc/invariants.hpp>
#include <hsc/persistence.hpp>

#include <benchmark/benchmark.h>

using namespace hsc;

namespace {

// Fresh memo every iteration, so this is the cold cost of the recursion.
void BM_SdCold(benchmark::State& state) {
  long d = state.range(0);
  Rational x = ratio(3 * d + 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(s_d(d, x));
}
BENCHMARK(BM_SdCold)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

void BM_SdNearTau4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(s_d(21, ratio(55, 8)));
}
BENCHMARK(BM_SdNearTau4)->Unit(benchmark::kMillisecond);

void BM_AmReduce(benchmark::State& state) {
  ToricDomain dom = ToricDomain::ellipsoid(1, ratio(7, 2));
  Word w;
  for (long k = 0; k < state.range(0); ++k) w.push_back(Generator::beta(k + 2, k % 2));
  BarElement x(w);
  for (auto _ : state) benchmark::DoNotOptimize(am_reduce(dom, x));
}
BENCHMARK(BM_AmReduce)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_Barcode(benchmark::State& state) {
  ToricDomain dom = ToricDomain::polydisk(1, 1);
  long degree = -state.range(0);
  Truncation t = required_truncation_around(degree);
  for (auto _ : state) benchmark::DoNotOptimize(barcode(dom, degree, t));
}
BENCHMARK(BM_Barcode)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
