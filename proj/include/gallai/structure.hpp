#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/kernels.hpp"

namespace gallai {

enum class EdgeRelation { incident, disjoint };

/// Two distinct edges and whether they share an endpoint.
struct EdgePair {
  Edge e1;
  Edge e2;
  EdgeRelation relation = EdgeRelation::disjoint;

  /// Throws InputError when e1 == e2.
  static EdgePair of(const Edge& e1, const Edge& e2);
};

std::string_view to_string(Pattern pattern);
Pattern pattern_from_string(std::string_view text);

/// Both edges present, sharing a vertex whose two other endpoints are adjacent.
bool edges_span_triangle(const Graph& g, const Edge& e1, const Edge& e2);

/// Searches for a cycle on exactly `length` distinct vertices that uses every
/// edge in `edges` as a cycle edge and passes through every vertex in
/// `vertices`. The cycle is a subgraph, not necessarily induced. Returns the
/// cycle as a vertex sequence (closing edge implied) or std::nullopt.
std::optional<std::vector<Vertex>> find_cycle(const Graph& g, std::size_t length,
                                              std::span<const Edge> edges,
                                              std::span<const Vertex> vertices);

/// Cycle of exactly `length` (4..6) containing both edges.
bool edges_on_common_cycle(const Graph& g, const Edge& e1, const Edge& e2, std::size_t length);

/// v with N(v) forms the fan F_{deg(v)/2}: N(v) induces a perfect matching.
/// False for odd or zero degree.
bool neighborhood_is_fan(const Graph& g, Vertex v);

/// Components of the graph induced on N(v) that are cycles (length >= 3),
/// each listed from its smallest vertex towards its smaller neighbour.
/// Together with v each is a wheel with hub v.
std::vector<std::vector<Vertex>> wheels_at_vertex(const Graph& g, Vertex v);

/// Some cycle (length >= 3) in the graph induced on N(v), not necessarily a
/// whole component, so v is the hub of a (non-induced) wheel on it.
/// Prefers the first entry of wheels_at_vertex when there is one.
std::optional<std::vector<Vertex>> find_wheel_rim(const Graph& g, Vertex v);

/// Connected, at least 3 vertices, no articulation vertex.
bool is_two_connected(const Graph& g);

std::vector<Vertex> articulation_vertices(const Graph& g);

bool has_forbidden_induced(const Graph& g, Pattern pattern);

/// Smallest quadruple inducing `pattern`, if any.
std::optional<kernels::Quadruple> find_forbidden_induced(const Graph& g, Pattern pattern);

/// Non-induced containment: a diamond subgraph sits inside an induced diamond
/// or K4, a C4 subgraph inside an induced C4, diamond or K4.
bool contains_subgraph(const Graph& g, Pattern pattern);

std::size_t triangle_count_through_edge(const Graph& g, const Edge& e);

}  // namespace gallai
