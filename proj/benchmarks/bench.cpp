#include <benchmark/benchmark.h>

#include <chrono>

#include <tokendom/coloring.hpp>
#include <tokendom/construction.hpp>
#include <tokendom/grid.hpp>
#include <tokendom/solvers.hpp>
#include <tokendom/token_graph.hpp>

using namespace tokendom;

namespace {

void BM_Construct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(construct_dominating_set(n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Construct)->Arg(20)->Arg(50)->Arg(100)->Arg(300)->Complexity();

void BM_ConstructSweep(benchmark::State& state) {
  for (auto _ : state)
    for (int n = 20; n <= 300; ++n)
      benchmark::DoNotOptimize(construct_dominating_set(n));
}
BENCHMARK(BM_ConstructSweep)->Unit(benchmark::kMillisecond);

void BM_ColorClassStaircase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Region region = Region::staircase(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(color_class(region, {Coloring::G, 0, 4}));
}
BENCHMARK(BM_ColorClassStaircase)->Arg(50)->Arg(300);

void BM_TokenGraphBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(token_graph_of_path(n));
}
BENCHMARK(BM_TokenGraphBuild)->Arg(50)->Arg(150);

void BM_IsDominating(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteGraph graph = token_graph_of_path(n);
  const Certificate cert = construct_dominating_set(n);
  VertexSet set(graph.order());
  for (TokenPair t : cert.token_set) set.set(token_index(t));
  for (auto _ : state) benchmark::DoNotOptimize(is_dominating(graph, set));
}
BENCHMARK(BM_IsDominating)->Arg(50)->Arg(300);

void BM_ExactDomination(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteGraph graph = token_graph_of_path(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        exact_domination_number(graph, std::chrono::milliseconds(60000)));
}
BENCHMARK(BM_ExactDomination)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ExactPacking(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteGraph graph = token_graph_of_path(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        exact_packing_number(graph, std::chrono::milliseconds(60000)));
}
BENCHMARK(BM_ExactPacking)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
