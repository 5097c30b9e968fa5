#include <benchmark/benchmark.h>

#include "askzeta/graph.hpp"
#include "askzeta/zeta.hpp"

using namespace askzeta;

static void BM_master_formula_path(benchmark::State& state) {
  Graph g = Graph::path(static_cast<int>(state.range(0)));
  Hypergraph adj = adjacency_hypergraph(g.reflexive_closure());
  for (auto _ : state) benchmark::DoNotOptimize(master_W_H(adj).value);
}
BENCHMARK(BM_master_formula_path)->DenseRange(2, 7);

static void BM_wsharp_path(benchmark::State& state) {
  Graph g = Graph::path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wsharp(g).value);
}
BENCHMARK(BM_wsharp_path)->DenseRange(2, 7);

static void BM_hadamard(benchmark::State& state) {
  Graph g = Graph::path(4);
  BivariateRational w = wsharp(g).value;
  for (auto _ : state) benchmark::DoNotOptimize(w.hadamard_t(w));
}
BENCHMARK(BM_hadamard);

BENCHMARK_MAIN();
