#include "gallai/kernels.hpp"

namespace gallai::kernels {

bool derived_edge_relation(const Graph& g, const Edge& a, const Edge& b, DerivedKind kind) {
  const auto shared = shared_endpoint(a, b);
  if (!shared) return false;
  if (kind == DerivedKind::line) return true;
  const bool triangle = g.adjacent(a.other(*shared), b.other(*shared));
  return kind == DerivedKind::anti_gallai ? triangle : !triangle;
}

bool induces(const Graph& g, const Quadruple& q, Pattern pattern) {
  int edges = 0;
  std::array<int, 4> deg{};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (g.adjacent(q[i], q[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
    }
  }
  switch (pattern) {
    case Pattern::k4:
      return edges == 6;
    case Pattern::diamond:
      return edges == 5;
    case Pattern::c4:
      return edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2;
  }
  return false;
}

namespace serial {

CountMatrix common_neighbor_counts(const Graph& g) {
  const std::size_t n = g.order();
  CountMatrix counts(n * n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) {
      std::uint32_t c = 0;
      for (Vertex w = 0; w < n; ++w) c += g.adjacent(u, w) && g.adjacent(v, w);
      counts[u * n + v] = counts[v * n + u] = c;
    }
  }
  return counts;
}

AdjacencyMatrix derived_adjacency(const Graph& g, DerivedKind kind) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  AdjacencyMatrix adj(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (derived_edge_relation(g, edges[i], edges[j], kind)) adj[i * m + j] = adj[j * m + i] = 1;
    }
  }
  return adj;
}

std::optional<Quadruple> find_induced(const Graph& g, Pattern pattern) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const Quadruple q{a, b, c, d};
          if (induces(g, q, pattern)) return q;
        }
  return std::nullopt;
}

std::optional<std::size_t> find_first(std::size_t count, const IndexPredicate& pred) {
  for (std::size_t i = 0; i < count; ++i) {
    if (pred(i)) return i;
  }
  return std::nullopt;
}

}  // namespace serial
}  // namespace gallai::kernels
