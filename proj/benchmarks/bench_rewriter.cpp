#include <benchmark/benchmark.h>

#include <klrw/rewriter.hpp>

#include <random>

using namespace klrw;

namespace {

Labels labels(std::vector<int> slots) {
  Labels x;
  x.n = static_cast<std::int8_t>(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) x.v[i] = static_cast<std::int8_t>(slots[i]);
  return x;
}

// Words of crossings on red followed by k black strands with alternating labels.
void BM_RandomWords(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  std::vector<int> slots{kRed};
  for (int i = 0; i < k; ++i) slots.push_back(i % 2);
  Labels x = labels(slots);
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> pos(0, k - 1);
  for (auto _ : state) {
    Rewriter rw(2, {1, 0});
    Word w;
    for (int i = 0; i < 2 * k; ++i) w.push_back(static_cast<std::int8_t>(pos(rng)));
    benchmark::DoNotOptimize(rw.word(x, w));
  }
}
BENCHMARK(BM_RandomWords)->DenseRange(3, 6);

void BM_SquareOfPull(benchmark::State& state) {
  Labels x = labels({kRed, 0, 0, 1, 1});
  Monomial y1, y2;
  y1.exp[1] = 1;
  y2.exp[2] = 1;
  for (auto _ : state) {
    Rewriter rw(2, {1, 0});
    ZElement h = rw.stack(x, {Layer::cross(1), Layer::dots(Poly{{y1, 1}})});
    add_scaled(h, rw.stack(x, {Layer::dots(Poly{{y2, 1}}), Layer::cross(1)}), -1, Monomial{});
    benchmark::DoNotOptimize(rw.multiply(x, h, h));
  }
}
BENCHMARK(BM_SquareOfPull);

}  // namespace

BENCHMARK_MAIN();
