#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

// Deterministic constructions. Vertex labelling is fixed per generator and
// documented beside each function; theorem witnesses and derived-graph
// orderings depend on it.

Graph empty_graph(std::size_t n);
/// P_n: i ~ i+1.
Graph path(std::size_t n);
/// C_n: i ~ i+1 mod n. Requires n >= 3.
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Kneser K(5,2): 2-subsets of {0..4} in lexicographic order, adjacent iff disjoint.
Graph petersen();
/// i ~ j iff j - i is a nonzero quadratic residue mod q. q must be a prime with q ≡ 1 (mod 4).
Graph paley(std::size_t q);
/// K_{2,2,2}: i ~ j unless i/2 == j/2.
Graph octahedron();
/// m x m rook's graph (= L(K_{m,m})): vertex r*m + c, adjacent iff same row or column.
Graph rook(std::size_t m);
/// T(m) (= L(K_m)): 2-subsets of {0..m-1} in lexicographic order, adjacent iff they meet.
Graph triangular(std::size_t m);
/// Folded 5-cube: vertices are 4-bit words, adjacent iff the XOR has weight 1 or 4.
Graph folded5cube();
/// W_n: rim C_n on 0..n-1, hub n.
Graph wheel(std::size_t n);
/// F_n: centre 0, triangle i on {0, 2i+1, 2i+2}.
Graph fan(std::size_t n);

/// Names accepted by generate(), in the order listed by the CLI.
std::vector<std::string> generator_names();

/// Dispatch by name. Throws InputError on unknown names or bad parameters.
Graph generate(std::string_view name, std::span<const std::int64_t> params);

struct SrgParameters {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  bool operator==(const SrgParameters&) const = default;
};

struct CorpusEntry {
  std::string name;
  std::vector<std::int64_t> params;
  Graph graph;
  SrgParameters expected;

  /// "name p1 p2", as accepted by the CLI's --gen.
  std::string label() const;
};

/// The strongly regular graphs every theorem check is swept over.
std::vector<CorpusEntry> srg_corpus();

}  // namespace gallai
