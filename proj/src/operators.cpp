#include "gallai/operators.hpp"

namespace gallai {

std::string_view to_string(DerivedKind kind) {
  switch (kind) {
    case DerivedKind::line:
      return "line";
    case DerivedKind::gallai:
      return "gallai";
    case DerivedKind::anti_gallai:
      return "anti_gallai";
  }
  return "unknown";
}

DerivedGraph derive(const Graph& g, DerivedKind kind) {
  auto adj = kernels::omp::derived_adjacency(g, kind);
  return {Graph::from_adjacency(g.size(), std::move(adj)), g.edges(), kind};
}

DerivedGraph line_graph(const Graph& g) { return derive(g, DerivedKind::line); }
DerivedGraph gallai(const Graph& g) { return derive(g, DerivedKind::gallai); }
DerivedGraph anti_gallai(const Graph& g) { return derive(g, DerivedKind::anti_gallai); }

Graph semi_total_point(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge e = g.edges()[i];
    edges.emplace_back(e.u, n + i);
    edges.emplace_back(e.v, n + i);
  }
  return Graph(n + g.size(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + n1, e.v + n1);
  for (Vertex a = 0; a < n1; ++a) {
    for (Vertex b = 0; b < n2; ++b) edges.emplace_back(a, n1 + b);
  }
  return Graph(n1 + n2, edges);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> matrix(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) matrix[i * n + j] = (i != j && !g.adjacent(i, j)) ? 1 : 0;
  }
  return Graph::from_adjacency(n, std::move(matrix));
}

}  // namespace gallai
