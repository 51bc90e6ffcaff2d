#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

enum class DerivedKind { line, gallai, anti_gallai };

/// Four-vertex graphs detected by the induced-subgraph scan.
enum class Pattern { diamond, c4, k4 };

/// Data-parallel scans over vertex pairs, edge pairs and vertex quadruples.
///
/// Every kernel exists twice: `serial` is the straightforward reference and
/// `omp` the OpenMP version used by the library. Both return identical
/// results, including which witness is reported, so tests compare them
/// directly. Without OpenMP the pragmas are ignored and `omp` runs serially.
namespace kernels {

/// Row-major n*n matrix of |N(u) ∩ N(v)|; the diagonal holds degrees.
using CountMatrix = std::vector<std::uint32_t>;

/// Row-major m*m 0/1 matrix over the source edge list.
using AdjacencyMatrix = std::vector<std::uint8_t>;

using Quadruple = std::array<Vertex, 4>;

/// Predicate evaluated on an index by find_first. Must be safe to call concurrently.
using IndexPredicate = std::function<bool(std::size_t)>;

/// Whether two distinct source edges are adjacent in the derived graph of `kind`.
bool derived_edge_relation(const Graph& g, const Edge& a, const Edge& b, DerivedKind kind);

/// Whether the four vertices induce `pattern`.
bool induces(const Graph& g, const Quadruple& q, Pattern pattern);

namespace serial {
CountMatrix common_neighbor_counts(const Graph& g);
AdjacencyMatrix derived_adjacency(const Graph& g, DerivedKind kind);
/// Lexicographically smallest ascending quadruple inducing `pattern`.
std::optional<Quadruple> find_induced(const Graph& g, Pattern pattern);
/// Smallest i < count with pred(i) true.
std::optional<std::size_t> find_first(std::size_t count, const IndexPredicate& pred);
}  // namespace serial

namespace omp {
CountMatrix common_neighbor_counts(const Graph& g);
AdjacencyMatrix derived_adjacency(const Graph& g, DerivedKind kind);
std::optional<Quadruple> find_induced(const Graph& g, Pattern pattern);
std::optional<std::size_t> find_first(std::size_t count, const IndexPredicate& pred);
}  // namespace omp

/// Threads the omp kernels will use (1 without OpenMP).
int max_threads();

}  // namespace kernels
}  // namespace gallai
