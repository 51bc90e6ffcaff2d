#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gallai {

using Vertex = std::size_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool incident_to(Vertex w) const { return u == w || v == w; }
  /// Endpoint opposite to `w`; `w` must be an endpoint.
  Vertex other(Vertex w) const { return w == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

/// The vertex shared by two distinct edges, if any.
std::optional<Vertex> shared_endpoint(const Edge& a, const Edge& b);

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is held densely (one byte per ordered pair) alongside sorted
/// neighbour lists and the lexicographically sorted edge list. Derived
/// graphs index their vertices by position in the source's edge list, so
/// that ordering is part of the contract.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws InputError on self-loops, out-of-range endpoints or repeated edges.
  Graph(std::size_t n, std::span<const Edge> edges);

  /// Builds from a row-major n*n 0/1 matrix; must be symmetric with empty diagonal.
  static Graph from_adjacency(std::size_t n, std::vector<std::uint8_t> matrix);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(Vertex a, Vertex b) const { return adjacency_[a * n_ + b] != 0; }
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::uint8_t>& adjacency() const { return adjacency_; }

  bool has_edge(const Edge& e) const;
  std::optional<std::size_t> edge_index(const Edge& e) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adjacency_ == other.adjacency_;
  }

 private:
  void index_from_adjacency();

  std::size_t n_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<Edge> edges_;
};

std::size_t degree(const Graph& g, Vertex v);

/// N(u) ∩ N(v); u and v must be distinct.
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);

/// Number of common neighbours without materialising the set.
std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v);

/// Breadth-first shortest-path length. std::nullopt means unreachable.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);

/// BFS distances from `source`; unreachable vertices map to std::nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source);

/// Component id per vertex, numbered in order of smallest member.
std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Vertex v of `g` becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace gallai
