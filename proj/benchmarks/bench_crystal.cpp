#include <benchmark/benchmark.h>

#include "icecrystal/crystal_graph.hpp"
#include "icecrystal/stembridge.hpp"
#include "icecrystal/tableau.hpp"

using namespace icecrystal;

namespace {

// Partitions of increasing crystal size: 8, 64, 140, 1024 nodes.
const std::vector<std::vector<int>> kShapes = {
    {2, 1, 0}, {3, 2, 1, 0}, {4, 2, 1, 0}, {4, 3, 2, 1, 0}};

Partition shape(const benchmark::State& state) {
  return Partition(kShapes[static_cast<std::size_t>(state.range(0))]);
}

void BM_Generate(benchmark::State& state) {
  const auto lambda = shape(state);
  std::size_t nodes = 0;
  for (auto _ : state) {
    auto c = generate(lambda);
    nodes = c.graph.node_count();
    benchmark::DoNotOptimize(c);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_VerifyRegular(benchmark::State& state) {
  const auto g = generate(shape(state)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(verify_regular(g));
  state.counters["nodes"] = static_cast<double>(g.node_count());
}

void BM_Isomorphic(benchmark::State& state) {
  const auto lambda = shape(state);
  const auto a = generate(lambda).graph;
  const auto b = tableau_crystal(lambda, lambda.n()).graph;
  for (auto _ : state) benchmark::DoNotOptimize(crystal_isomorphic(a, b));
  state.counters["nodes"] = static_cast<double>(a.node_count());
}

void BM_BruteForce(benchmark::State& state) {
  const auto lambda = shape(state);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_enumerate(lambda));
  state.counters["candidates"] = static_cast<double>(brute_force_candidates(lambda));
}

}  // namespace

BENCHMARK(BM_Generate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyRegular)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Isomorphic)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForce)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
