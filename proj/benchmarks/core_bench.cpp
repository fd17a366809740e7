#include <benchmark/benchmark.h>

#include <random>

#include "hilbertkit/closure.hpp"
#include "hilbertkit/echelon.hpp"
#include "hilbertkit/extract.hpp"
#include "hilbertkit/grid.hpp"
#include "hilbertkit/hilbert.hpp"

using namespace hilbertkit;

namespace {

void BM_CountLowWeightPrefix(benchmark::State& state) {
  const GridShape shape = GridShape::hypercube(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const u128 k = shape.size() / 3 + 1;
  const long long d = shape.max_weight() / 2;
  for (auto _ : state) benchmark::DoNotOptimize(count_low_weight_prefix(shape, k, d));
}
BENCHMARK(BM_CountLowWeightPrefix)->Args({2, 64})->Args({3, 40})->Args({16, 30});

void BM_LexRank(benchmark::State& state) {
  const GridShape shape = GridShape::hypercube(5, 20);
  const auto x = lex_unrank(shape, shape.size() / 7);
  for (auto _ : state) benchmark::DoNotOptimize(lex_rank(shape, x));
}
BENCHMARK(BM_LexRank);

void BM_ClosureSizeBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(closure_size_bound(3, 30, 10, 1000000));
}
BENCHMARK(BM_ClosureSizeBound);

PointSet random_set(std::uint32_t q, int n, std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < size; ++i) pts.push_back(point_unrank(q, n, rng() % PointSet::full_space(q, n).size()));
  return PointSet(q, n, pts);
}

void BM_ClosureScan(benchmark::State& state) {
  const auto f = FieldSpec::of_order(static_cast<std::uint32_t>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  const auto t = random_set(f.order(), n, 12, 1);
  const ClosureEngine engine(f, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(engine.closure(t));
}
BENCHMARK(BM_ClosureScan)->Args({2, 12})->Args({3, 7})->Args({5, 5});

void BM_HilbertFunction(benchmark::State& state) {
  const auto f = FieldSpec::of_order(static_cast<std::uint32_t>(state.range(0)));
  const auto s = random_set(f.order(), 4, static_cast<std::size_t>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_function(f, s, 3));
}
BENCHMARK(BM_HilbertFunction)->Args({2, 10})->Args({4, 100})->Args({9, 400});

void BM_EchelonInsert(benchmark::State& state) {
  const auto f = FieldSpec::of_order(static_cast<std::uint32_t>(state.range(0)));
  const std::size_t len = 128;
  std::mt19937_64 rng(3);
  std::vector<std::vector<FieldElement>> rows(len, std::vector<FieldElement>(len));
  for (auto& r : rows)
    for (auto& x : r) x = f.element(static_cast<std::uint32_t>(rng() % f.order()));
  for (auto _ : state) {
    EchelonBasis b(f, len);
    for (const auto& r : rows) b.insert(r);
    benchmark::DoNotOptimize(b.rank());
  }
}
BENCHMARK(BM_EchelonInsert)->Arg(2)->Arg(16)->Arg(1024);

void BM_ExtractorError(benchmark::State& state) {
  const auto x = Distribution::uniform(14);
  Rng rng(4);
  std::vector<PolynomialGF2> polys;
  for (int i = 0; i < state.range(0); ++i) polys.push_back(sample_poly(14, 2, rng));
  for (auto _ : state) benchmark::DoNotOptimize(extractor_error(polys, x));
}
BENCHMARK(BM_ExtractorError)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
