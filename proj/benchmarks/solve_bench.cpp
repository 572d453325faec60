// Microbenchmarks for the closure primitive and the full solve pipeline.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "zf/approx.hpp"
#include "zf/forcing.hpp"
#include "zf/generators.hpp"
#include "zf/graph.hpp"
#include "zf/path_decomposition.hpp"

namespace {

using namespace zf;

void BM_ClosurePath(benchmark::State& state) {
  const Vertex n = static_cast<Vertex>(state.range(0));
  const Graph g = path_graph(n);
  const VertexSet seed({0});
  for (auto _ : state) {
    Colouring r = closure(g, seed);
    benchmark::DoNotOptimize(r.blue);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ClosurePath)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

void BM_ClosureProperInterval(benchmark::State& state) {
  const Vertex n = static_cast<Vertex>(state.range(0));
  std::mt19937_64 rng(7);
  const Graph g = random_proper_interval_graph(n, rng);
  const VertexSet seed = VertexSet::range(std::max<Vertex>(1, n / 8));
  for (auto _ : state) {
    Colouring r = closure(g, seed);
    benchmark::DoNotOptimize(r.blue);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ClosureProperInterval)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_SolvePath(benchmark::State& state) {
  const Vertex n = static_cast<Vertex>(state.range(0));
  const Graph g = path_graph(n);
  const PathDecomposition pd = path_graph_decomposition(g);
  for (auto _ : state) {
    const NicePathDecomposition npd = make_nice(g, pd);
    ApproxResult r = approximate_zero_forcing(g, npd);
    benchmark::DoNotOptimize(r.s);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolvePath)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

void BM_SolveLadder(benchmark::State& state) {
  const Vertex rungs = static_cast<Vertex>(state.range(0));
  const Graph g = ladder_graph(rungs);
  const PathDecomposition pd = ladder_graph_decomposition(g);
  for (auto _ : state) {
    const NicePathDecomposition npd = make_nice(g, pd);
    ApproxResult r = approximate_zero_forcing(g, npd);
    benchmark::DoNotOptimize(r.s);
  }
  state.SetComplexityN(rungs);
}
BENCHMARK(BM_SolveLadder)->RangeMultiplier(4)->Range(32, 32768)->Complexity();

void BM_VerifyPath(benchmark::State& state) {
  const Vertex n = static_cast<Vertex>(state.range(0));
  const Graph g = path_graph(n);
  const NicePathDecomposition npd = make_nice(g, path_graph_decomposition(g));
  const ApproxResult r = approximate_zero_forcing(g, npd);
  for (auto _ : state) {
    VerificationReport v = verify_result(g, r);
    benchmark::DoNotOptimize(v);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_VerifyPath)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

}  // namespace

BENCHMARK_MAIN();
