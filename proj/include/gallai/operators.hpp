#pragma once

#include <string_view>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/kernels.hpp"

namespace gallai {

/// A graph whose vertex i stands for edge i of the source's sorted edge list.
struct DerivedGraph {
  Graph graph;
  std::vector<Edge> source_edges;
  DerivedKind kind = DerivedKind::line;
};

std::string_view to_string(DerivedKind kind);

/// L(G): edges adjacent iff they share an endpoint.
DerivedGraph line_graph(const Graph& g);

/// Γ(G): edges adjacent iff they share an endpoint and do not lie on a common triangle.
DerivedGraph gallai(const Graph& g);

/// Δ(G): edges adjacent iff they lie on a common triangle.
DerivedGraph anti_gallai(const Graph& g);

DerivedGraph derive(const Graph& g, DerivedKind kind);

/// R(G). Vertices 0..n-1 are the originals; vertex n+i is attached to both
/// endpoints of edge i.
Graph semi_total_point(const Graph& g);

/// G1 ∨ G2 with g1's vertices first.
Graph join(const Graph& g1, const Graph& g2);

Graph complement(const Graph& g);

}  // namespace gallai
