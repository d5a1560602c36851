#include <benchmark/benchmark.h>

#include <random>

#include "zonotopal/filtration.hpp"
#include "zonotopal/graph.hpp"
#include "zonotopal/lattice.hpp"
#include "zonotopal/random_suite.hpp"
#include "zonotopal/tutte.hpp"

using namespace zonotopal;

namespace {

DirectedGraph house() {
  DirectedGraph g;
  for (const char* v : {"a", "b", "c", "d", "e"}) g.addVertex(v);
  g.addArrow(1, "c", "b");
  g.addArrow(2, "b", "a");
  g.addArrow(3, "a", "d");
  g.addArrow(4, "d", "c");
  g.addArrow(5, "c", "e");
  g.addArrow(6, "e", "d");
  return g;
}

// k parallel arrows between two vertices.
DirectedGraph banana(long k) {
  DirectedGraph g;
  g.addVertex("s");
  g.addVertex("t");
  for (long i = 1; i <= k; ++i) g.addArrow(i, "s", "t");
  return g;
}

DirectedGraph completeGraph(std::size_t n) {
  DirectedGraph g;
  for (std::size_t v = 0; v < n; ++v) g.addVertex("v" + std::to_string(v));
  ArrowId id = 1;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.addArrow(id++, u, v);
  return g;
}

void BM_HouseFiltration(benchmark::State& state) {
  const auto va = cographicalArrangement(house()).arrangement;
  for (auto _ : state) benchmark::DoNotOptimize(computeFiltration(va));
}
BENCHMARK(BM_HouseFiltration)->Unit(benchmark::kMillisecond);

void BM_BananaFiltration(benchmark::State& state) {
  const auto va = cographicalArrangement(banana(state.range(0))).arrangement;
  for (auto _ : state) benchmark::DoNotOptimize(computeFiltration(va));
}
BENCHMARK(BM_BananaFiltration)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_GraphTutte(benchmark::State& state) {
  const auto g = completeGraph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tuttePolynomial(g));
}
BENCHMARK(BM_GraphTutte)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_MatroidTutte(benchmark::State& state) {
  const auto va = cographicalArrangement(completeGraph(static_cast<std::size_t>(state.range(0)))).arrangement;
  for (auto _ : state) benchmark::DoNotOptimize(tutteOfArrangement(va));
}
BENCHMARK(BM_MatroidTutte)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

void BM_HermiteNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  IntMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) m(i, j) = static_cast<long>(drawBelow(rng, 201)) - 100;
  for (auto _ : state) benchmark::DoNotOptimize(hermiteNormalForm(m));
}
BENCHMARK(BM_HermiteNormalForm)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

void BM_RandomSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(runRandomSuite(1, 10, 7));
}
BENCHMARK(BM_RandomSuite)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
