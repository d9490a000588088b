// Serial vs parallel kernels. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "indshell/chordality.hpp"
#include "indshell/complex.hpp"
#include "indshell/conn.hpp"
#include "indshell/constructions.hpp"
#include "indshell/shelling.hpp"

using namespace indshell;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::Serial : Execution::Parallel; }

void BM_Shellable(benchmark::State& state) {
  const SimplicialComplex d = ind_r_complex(whiskered(with_index_labels(random_graph(7, 0.5, 3))).graph, 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_shellable(d, kDefaultBudget, mode(state)).verdict);
  state.counters["facets"] = d.facet_count();
}
BENCHMARK(BM_Shellable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Full refutation: ind(C12) is not shellable.
void BM_RefuteCycle(benchmark::State& state) {
  Graph c(12);
  for (Vertex v = 0; v < 12; ++v) c.add_edge(v, (v + 1) % 12);
  const SimplicialComplex d = ind_r_complex(c, 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_shellable(d, kDefaultBudget, mode(state)).nodes);
  state.counters["facets"] = d.facet_count();
}
BENCHMARK(BM_RefuteCycle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_WChordal(benchmark::State& state) {
  const Hypergraph h = con_r(star_clique({2, 2, 2, 1}).graph, 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_w_chordal(h, kDefaultBudget, mode(state)).minors_examined);
}
BENCHMARK(BM_WChordal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ConnectedSubsets(benchmark::State& state) {
  const Graph g = random_graph(40, 0.12, 5);
  for (auto _ : state) {
    auto subsets = state.range(0) == 0 ? connected_subsets(g, 5) : connected_subsets_parallel(g, 5);
    benchmark::DoNotOptimize(subsets.data());
  }
}
BENCHMARK(BM_ConnectedSubsets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
