#include "gallai/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gallai/errors.hpp"

namespace gallai {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(g.order()));
  }
}

}  // namespace

std::optional<Vertex> shared_endpoint(const Edge& a, const Edge& b) {
  if (a == b) return std::nullopt;
  if (a.u == b.u || a.u == b.v) return a.u;
  if (a.v == b.u || a.v == b.v) return a.v;
  return std::nullopt;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(std::size_t n) : n_(n), adjacency_(n * n, 0), neighbors_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n), adjacency_(n * n, 0) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for graph of order " + std::to_string(n));
    }
    auto& cell = adjacency_[e.u * n + e.v];
    if (cell) {
      throw InputError("repeated edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    cell = 1;
    adjacency_[e.v * n + e.u] = 1;
  }
  index_from_adjacency();
}

Graph Graph::from_adjacency(std::size_t n, std::vector<std::uint8_t> matrix) {
  if (matrix.size() != n * n) throw InputError("adjacency matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i * n + i]) throw InputError("self-loop at vertex " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((matrix[i * n + j] != 0) != (matrix[j * n + i] != 0)) {
        throw InputError("adjacency matrix is not symmetric");
      }
    }
  }
  for (auto& cell : matrix) cell = cell ? 1 : 0;
  Graph g;
  g.n_ = n;
  g.adjacency_ = std::move(matrix);
  g.index_from_adjacency();
  return g;
}

void Graph::index_from_adjacency() {
  neighbors_.assign(n_, {});
  edges_.clear();
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (adjacency_[i * n_ + j]) {
        neighbors_[i].push_back(j);
        if (i < j) edges_.emplace_back(i, j);
      }
    }
  }
}

bool Graph::has_edge(const Edge& e) const {
  return e.u < n_ && e.v < n_ && e.u != e.v && adjacent(e.u, e.v);
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t degree(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.neighbors(v).size();
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw InputError("common_neighbors needs two distinct vertices");
  std::vector<Vertex> out;
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
  std::size_t count = 0;
  for (Vertex w : g.neighbors(u)) count += g.adjacent(w, v);
  return count;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  return distances_from(g, u)[v];
}

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.order(), kUnset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (comp[y] == kUnset) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const std::size_t k = vertices.size();
  std::vector<std::uint8_t> matrix(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    check_vertex(g, vertices[i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && vertices[i] == vertices[j]) throw InputError("repeated vertex in subset");
      matrix[i * k + j] = (i != j && g.adjacent(vertices[i], vertices[j])) ? 1 : 0;
    }
  }
  return Graph::from_adjacency(k, std::move(matrix));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw InputError("permutation length differs from graph order");
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex p : perm) {
    if (p >= n || seen[p]) throw InputError("relabel map is not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(n, edges);
}

}  // namespace gallai
