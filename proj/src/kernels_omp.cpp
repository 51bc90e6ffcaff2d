#include <cstdint>
#include <exception>

#include "gallai/kernels.hpp"

#ifdef GALLAI_HAVE_OPENMP
#include <omp.h>
#endif

namespace gallai::kernels {

int max_threads() {
#ifdef GALLAI_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace omp {

CountMatrix common_neighbor_counts(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  const auto& adj = g.adjacency();
  CountMatrix counts(g.order() * g.order(), 0);
  // Row u is written only by iteration u; the transposed entries (v,u) with
  // v > u are owned by the same iteration.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t u = 0; u < n; ++u) {
    const std::uint8_t* row_u = adj.data() + u * n;
    for (std::int64_t v = u; v < n; ++v) {
      const std::uint8_t* row_v = adj.data() + v * n;
      std::uint32_t c = 0;
#pragma omp simd reduction(+ : c)
      for (std::int64_t w = 0; w < n; ++w) c += row_u[w] & row_v[w];
      counts[u * n + v] = counts[v * n + u] = c;
    }
  }
  return counts;
}

AdjacencyMatrix derived_adjacency(const Graph& g, DerivedKind kind) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  // Only edges sharing an endpoint can be related, so each row scans the
  // edges incident to its two endpoints. A thread writes only its own row.
  std::vector<std::vector<std::size_t>> incident(g.order());
  for (std::size_t i = 0; i < m; ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  AdjacencyMatrix adj(m * m, 0);
  const auto rows = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t r = 0; r < rows; ++r) {
    const auto i = static_cast<std::size_t>(r);
    for (Vertex w : {edges[i].u, edges[i].v}) {
      for (std::size_t j : incident[w]) {
        if (j != i && derived_edge_relation(g, edges[i], edges[j], kind)) adj[i * m + j] = 1;
      }
    }
  }
  return adj;
}

std::optional<std::size_t> find_first(std::size_t count, const IndexPredicate& pred) {
  const auto total = static_cast<std::int64_t>(count);
  std::int64_t best = total;
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (std::int64_t i = 0; i < total; ++i) {
    if (i >= best) continue;
    try {
      if (pred(static_cast<std::size_t>(i))) best = i;
    } catch (...) {
#pragma omp critical(gallai_find_first)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  if (best == total) return std::nullopt;
  return static_cast<std::size_t>(best);
}

std::optional<Quadruple> find_induced(const Graph& g, Pattern pattern) {
  const std::size_t n = g.order();
  // Parallel over the smallest vertex, then a serial scan of that slice keeps
  // the reported quadruple identical to the serial kernel.
  auto first_in_slice = [&](Vertex a) -> std::optional<Quadruple> {
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const Quadruple q{a, b, c, d};
          if (induces(g, q, pattern)) return q;
        }
    return std::nullopt;
  };
  const auto slice = find_first(n, [&](std::size_t a) { return first_in_slice(a).has_value(); });
  if (!slice) return std::nullopt;
  return first_in_slice(*slice);
}

}  // namespace omp
}  // namespace gallai::kernels
