#include "gallai/structure.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "gallai/errors.hpp"
#include "gallai/regularity.hpp"

namespace gallai {

namespace {

std::string describe(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

void require_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw InputError("edge " + describe(e) + " is not in the graph");
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
}

constexpr std::size_t kFar = static_cast<std::size_t>(-1);

std::vector<std::size_t> bfs_or_far(const Graph& g, Vertex source) {
  auto dist = distances_from(g, source);
  std::vector<std::size_t> out(dist.size(), kFar);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i]) out[i] = *dist[i];
  }
  return out;
}

class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t length, std::span<const Edge> edges,
              std::span<const Vertex> vertices)
      : g_(g), length_(length), edges_(edges.begin(), edges.end()),
        vertices_(vertices.begin(), vertices.end()), on_path_(g.order(), 0) {
    for (Vertex x : vertices_) targets_.push_back(x);
    for (const Edge& e : edges_) {
      targets_.push_back(e.u);
      targets_.push_back(e.v);
    }
    std::sort(targets_.begin(), targets_.end());
    targets_.erase(std::unique(targets_.begin(), targets_.end()), targets_.end());
    for (Vertex t : targets_) target_dist_.push_back(bfs_or_far(g, t));
  }

  std::optional<std::vector<Vertex>> run() {
    if (!edges_.empty()) {
      const Edge anchor = edges_.front();
      start_dist_ = &target_dist_[target_slot(anchor.u)];
      push(anchor.u);
      push(anchor.v);
      if (extend()) return path_;
      return std::nullopt;
    }
    if (!vertices_.empty()) {
      const Vertex anchor = vertices_.front();
      start_dist_ = &target_dist_[target_slot(anchor)];
      push(anchor);
      if (extend()) return path_;
      return std::nullopt;
    }
    for (Vertex s = 0; s < g_.order(); ++s) {
      own_start_dist_ = bfs_or_far(g_, s);
      start_dist_ = &own_start_dist_;
      push(s);
      if (extend()) return path_;
      pop();
    }
    return std::nullopt;
  }

 private:
  std::size_t target_slot(Vertex v) const {
    return static_cast<std::size_t>(std::lower_bound(targets_.begin(), targets_.end(), v) -
                                    targets_.begin());
  }

  void push(Vertex v) {
    path_.push_back(v);
    on_path_[v] = 1;
  }
  void pop() {
    on_path_[path_.back()] = 0;
    path_.pop_back();
  }

  bool feasible() const {
    const Vertex tail = path_.back();
    const std::size_t remaining = length_ - path_.size();
    // Steps still available to walk from the tail back to the start.
    if ((*start_dist_)[tail] > remaining + 1) return false;
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      if (!on_path_[targets_[i]] && target_dist_[i][tail] > remaining) return false;
    }
    return true;
  }

  bool complete() const {
    if (!g_.adjacent(path_.back(), path_.front())) return false;
    for (Vertex x : vertices_) {
      if (!on_path_[x]) return false;
    }
    for (const Edge& e : edges_) {
      bool found = false;
      for (std::size_t i = 0; i < path_.size() && !found; ++i) {
        found = Edge(path_[i], path_[(i + 1) % path_.size()]) == e;
      }
      if (!found) return false;
    }
    return true;
  }

  bool extend() {
    if (path_.size() == length_) return complete();
    if (!feasible()) return false;
    // Without a required edge, fix the start as the smallest cycle vertex.
    const bool canonical_start = edges_.empty() && vertices_.empty();
    for (Vertex next : g_.neighbors(path_.back())) {
      if (on_path_[next]) continue;
      if (canonical_start && next < path_.front()) continue;
      push(next);
      if (extend()) return true;
      pop();
    }
    return false;
  }

  const Graph& g_;
  std::size_t length_;
  std::vector<Edge> edges_;
  std::vector<Vertex> vertices_;
  std::vector<Vertex> targets_;
  std::vector<std::vector<std::size_t>> target_dist_;
  std::vector<std::size_t> own_start_dist_;
  const std::vector<std::size_t>* start_dist_ = nullptr;
  std::vector<std::uint8_t> on_path_;
  std::vector<Vertex> path_;
};

}  // namespace

EdgePair EdgePair::of(const Edge& e1, const Edge& e2) {
  if (e1 == e2) throw InputError("edge pair needs two distinct edges, got " + describe(e1) + " twice");
  return {e1, e2, shared_endpoint(e1, e2) ? EdgeRelation::incident : EdgeRelation::disjoint};
}

std::string_view to_string(Pattern pattern) {
  switch (pattern) {
    case Pattern::diamond:
      return "diamond";
    case Pattern::c4:
      return "C4";
    case Pattern::k4:
      return "K4";
  }
  return "unknown";
}

Pattern pattern_from_string(std::string_view text) {
  for (auto p : {Pattern::diamond, Pattern::c4, Pattern::k4}) {
    if (to_string(p) == text) return p;
  }
  throw InputError("unknown pattern '" + std::string(text) + "'");
}

bool edges_span_triangle(const Graph& g, const Edge& e1, const Edge& e2) {
  require_edge(g, e1);
  require_edge(g, e2);
  const auto pair = EdgePair::of(e1, e2);
  if (pair.relation != EdgeRelation::incident) return false;
  const Vertex w = *shared_endpoint(e1, e2);
  return g.adjacent(e1.other(w), e2.other(w));
}

std::optional<std::vector<Vertex>> find_cycle(const Graph& g, std::size_t length,
                                              std::span<const Edge> edges,
                                              std::span<const Vertex> vertices) {
  if (length < 3) throw InputError("cycles need at least 3 vertices");
  for (const Edge& e : edges) require_edge(g, e);
  for (Vertex v : vertices) require_vertex(g, v);
  if (length > g.order()) return std::nullopt;
  return CycleSearch(g, length, edges, vertices).run();
}

bool edges_on_common_cycle(const Graph& g, const Edge& e1, const Edge& e2, std::size_t length) {
  if (length < 4 || length > 6) {
    throw InputError("co-cycle length must be in 4..6, got " + std::to_string(length));
  }
  EdgePair::of(e1, e2);
  const Edge pair[] = {e1, e2};
  return find_cycle(g, length, pair, {}).has_value();
}

bool neighborhood_is_fan(const Graph& g, Vertex v) {
  require_vertex(g, v);
  const auto nbrs = g.neighbors(v);
  if (nbrs.empty() || nbrs.size() % 2 != 0) return false;
  for (Vertex x : nbrs) {
    std::size_t inside = 0;
    for (Vertex y : nbrs) inside += g.adjacent(x, y);
    if (inside != 1) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> wheels_at_vertex(const Graph& g, Vertex v) {
  require_vertex(g, v);
  const auto nbrs = g.neighbors(v);
  const std::vector<Vertex> members(nbrs.begin(), nbrs.end());
  const Graph local = induced_subgraph(g, members);
  std::size_t count = 0;
  const auto comp = connected_components(local, &count);

  std::vector<std::vector<Vertex>> wheels;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Vertex> nodes;
    for (std::size_t i = 0; i < local.order(); ++i) {
      if (comp[i] == c) nodes.push_back(i);
    }
    const bool is_cycle = nodes.size() >= 3 && std::all_of(nodes.begin(), nodes.end(), [&](Vertex x) {
      return local.neighbors(x).size() == 2;
    });
    if (!is_cycle) continue;
    std::vector<Vertex> order{nodes.front()};
    Vertex prev = nodes.front();
    Vertex cur = local.neighbors(prev)[0];
    while (cur != nodes.front()) {
      order.push_back(cur);
      const auto adj = local.neighbors(cur);
      const Vertex next = adj[0] == prev ? adj[1] : adj[0];
      prev = cur;
      cur = next;
    }
    for (auto& x : order) x = members[x];
    wheels.push_back(std::move(order));
  }
  return wheels;
}

std::optional<std::vector<Vertex>> find_wheel_rim(const Graph& g, Vertex v) {
  auto wheels = wheels_at_vertex(g, v);
  if (!wheels.empty()) return std::move(wheels.front());

  const auto nbrs = g.neighbors(v);
  const std::vector<Vertex> members(nbrs.begin(), nbrs.end());
  const Graph local = induced_subgraph(g, members);
  const std::size_t m = local.order();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(m, kNone), depth(m, kNone);

  // Any non-tree edge of a DFS forest closes a cycle with the tree path.
  std::function<std::optional<std::vector<Vertex>>(Vertex)> visit =
      [&](Vertex x) -> std::optional<std::vector<Vertex>> {
    for (Vertex y : local.neighbors(x)) {
      if (y == parent[x]) continue;
      if (depth[y] == kNone) {
        parent[y] = x;
        depth[y] = depth[x] + 1;
        if (auto found = visit(y)) return found;
      } else if (depth[y] < depth[x]) {
        std::vector<Vertex> cycle;
        for (Vertex z = x; z != y; z = parent[z]) cycle.push_back(members[z]);
        cycle.push_back(members[y]);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
    }
    return std::nullopt;
  };
  for (Vertex s = 0; s < m; ++s) {
    if (depth[s] != kNone) continue;
    depth[s] = 0;
    if (auto found = visit(s)) return found;
  }
  return std::nullopt;
}

std::vector<Vertex> articulation_vertices(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0);
  std::vector<std::uint8_t> cut(n, 0);
  std::size_t timer = 0;

  std::function<void(Vertex, Vertex)> visit = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    std::size_t children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] != kUnseen) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      visit(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent != kUnseen && low[w] >= disc[v]) cut[v] = 1;
    }
    if (parent == kUnseen && children > 1) cut[v] = 1;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] == kUnseen) visit(s, kUnseen);
  }

  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (cut[v]) out.push_back(v);
  }
  return out;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && articulation_vertices(g).empty();
}

std::optional<kernels::Quadruple> find_forbidden_induced(const Graph& g, Pattern pattern) {
  return kernels::omp::find_induced(g, pattern);
}

bool has_forbidden_induced(const Graph& g, Pattern pattern) {
  return find_forbidden_induced(g, pattern).has_value();
}

bool contains_subgraph(const Graph& g, Pattern pattern) {
  switch (pattern) {
    case Pattern::k4:
      return has_forbidden_induced(g, Pattern::k4);
    case Pattern::diamond:
      return has_forbidden_induced(g, Pattern::diamond) || has_forbidden_induced(g, Pattern::k4);
    case Pattern::c4:
      return has_forbidden_induced(g, Pattern::c4) || contains_subgraph(g, Pattern::diamond);
  }
  return false;
}

std::size_t triangle_count_through_edge(const Graph& g, const Edge& e) {
  require_edge(g, e);
  return common_neighbor_count(g, e.u, e.v);
}

}  // namespace gallai
