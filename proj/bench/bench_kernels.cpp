// Serial reference kernels against their OpenMP counterparts on the same inputs.
// Run with --benchmark_filter=<regex> to select; thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>

#include "gallai/generators.hpp"
#include "gallai/kernels.hpp"
#include "gallai/operators.hpp"

namespace {

using namespace gallai;

Graph random_graph(std::size_t n, double p) {
  std::mt19937 rng(12345);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

/// Random bipartite graph: triangle-free, so it contains no K4 at all.
Graph random_bipartite(std::size_t half, double p) {
  std::mt19937 rng(54321);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < half; ++u) {
    for (Vertex v = half; v < 2 * half; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(2 * half, edges);
}

const Graph& input(int which) {
  static const Graph graphs[] = {paley(61), paley(101), random_graph(200, 0.1), line_graph(paley(29)).graph,
                                 random_bipartite(60, 0.3)};
  return graphs[which];
}

const char* input_name(int which) {
  static const char* names[] = {"paley61", "paley101", "gnp200", "line_paley29", "bipartite120"};
  return names[which];
}

template <auto Kernel>
void counts(benchmark::State& state) {
  const Graph& g = input(static_cast<int>(state.range(0)));
  state.SetLabel(input_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
}

template <auto Kernel>
void derived(benchmark::State& state) {
  const Graph& g = input(static_cast<int>(state.range(0)));
  state.SetLabel(input_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, DerivedKind::gallai));
}

// The bipartite input has no K4, so the search scans every quadruple.
template <auto Kernel>
void induced(benchmark::State& state) {
  const Graph& g = input(static_cast<int>(state.range(0)));
  state.SetLabel(input_name(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, Pattern::k4));
}

}  // namespace

BENCHMARK(counts<kernels::serial::common_neighbor_counts>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(counts<kernels::omp::common_neighbor_counts>)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(derived<kernels::serial::derived_adjacency>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(derived<kernels::omp::derived_adjacency>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(induced<kernels::serial::find_induced>)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(induced<kernels::omp::find_induced>)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
