#include <benchmark/benchmark.h>

#include <klrw/quotient.hpp>
#include <klrw/weyl.hpp>

using namespace klrw;

namespace {

const char* const kWords[] = {"id", "s0", "s1s0"};

AlgebraSpec spec_for(int word, RootVec alpha, FieldSpec field = {}) {
  Pressure chi = act_pressure(CartanDatum(2), parse_weyl_word(kWords[word]), standard_pressure(2));
  return AlgebraSpec{2, Weight::fundamental(2, 0), std::move(alpha), chi, field};
}

void BM_SurvivorsTwoDelta(benchmark::State& state) {
  AlgebraSpec spec = spec_for(static_cast<int>(state.range(0)), RootVec({2, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(survivors(spec));
}
BENCHMARK(BM_SurvivorsTwoDelta)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_GradedDimsTwoDelta(benchmark::State& state) {
  AlgebraSpec spec = spec_for(static_cast<int>(state.range(0)), RootVec({2, 2}), FieldSpec{2147483647});
  for (auto _ : state) benchmark::DoNotOptimize(quotient_graded_dims(spec, 20));
}
BENCHMARK(BM_GradedDimsTwoDelta)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SimplesAtStandardPressure(benchmark::State& state) {
  AlgebraSpec spec = spec_for(0, RootVec({2, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(count_simple_factors(spec, {}, 24));
}
BENCHMARK(BM_SimplesAtStandardPressure)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
