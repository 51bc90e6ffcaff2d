#include <gtest/gtest.h>

#include <random>

#include "gallai/generators.hpp"
#include "gallai/operators.hpp"
#include "gallai/regularity.hpp"
#include "test_support.hpp"

namespace gallai {
namespace {

void expect_regular(const Graph& g, std::size_t k) {
  for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(degree(g, v), k) << "vertex " << v;
}

TEST(LineGraph, Examples) {
  EXPECT_EQ(line_graph(complete(3)).graph, complete(3));
  const auto lp = line_graph(petersen());
  EXPECT_EQ(lp.graph.order(), 15u);
  expect_regular(lp.graph, 4);
  EXPECT_EQ(line_graph(path(3)).graph, complete(2));
  EXPECT_EQ(line_graph(empty_graph(4)).graph.order(), 0u);
  EXPECT_EQ(lp.source_edges, petersen().edges());
  EXPECT_EQ(lp.kind, DerivedKind::line);
}

TEST(Gallai, Examples) {
  EXPECT_EQ(gallai(complete(3)).graph, empty_graph(3));
  EXPECT_EQ(gallai(petersen()).graph, line_graph(petersen()).graph);
  const auto go = gallai(octahedron());
  EXPECT_EQ(go.graph.order(), 12u);
  expect_regular(go.graph, 2);
}

TEST(AntiGallai, Examples) {
  EXPECT_EQ(anti_gallai(petersen()).graph, empty_graph(15));
  EXPECT_EQ(anti_gallai(complete(4)).graph, line_graph(complete(4)).graph);
  EXPECT_EQ(anti_gallai(complete(6)).graph, line_graph(complete(6)).graph);
}

// Every edge of a λ=1 SRG lies in exactly one triangle, so Δ is kn/6 disjoint triangles.
TEST(AntiGallai, LambdaOneGivesDisjointTriangles) {
  const Graph g = rook(3);
  const Graph d = anti_gallai(g).graph;
  EXPECT_EQ(d.order(), 18u);
  expect_regular(d, 2);
  std::size_t count = 0;
  const auto comp = connected_components(d, &count);
  EXPECT_EQ(count, 4u * 9u / 6u);
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  for (auto s : sizes) EXPECT_EQ(s, 3u);
}

TEST(SemiTotalPoint, Examples) {
  const Graph r3 = semi_total_point(cycle(3));
  EXPECT_EQ(r3.order(), 6u);
  EXPECT_EQ(r3.size(), 9u);
  EXPECT_EQ(semi_total_point(complete(2)), complete(3));

  const Graph r6 = semi_total_point(cycle(6));
  EXPECT_EQ(r6.order(), 12u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(degree(r6, v), 4u);
  for (Vertex v = 6; v < 12; ++v) EXPECT_EQ(degree(r6, v), 2u);
  const Edge e = cycle(6).edges()[2];
  EXPECT_TRUE(r6.adjacent(8, e.u));
  EXPECT_TRUE(r6.adjacent(8, e.v));
}

TEST(Join, Examples) {
  EXPECT_EQ(join(cycle(5), complete(1)), wheel(5));
  EXPECT_EQ(join(empty_graph(2), empty_graph(3)), complete_bipartite(2, 3));
  EXPECT_EQ(join(complete(1), complete(1)), complete(2));
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(complement(petersen())), petersen());
  EXPECT_EQ(complement(complete(5)), empty_graph(5));
  const auto r = classify(complement(petersen()));
  EXPECT_EQ(r.level, RegularityLevel::strongly_regular);
  EXPECT_EQ(r.k, 6);
  EXPECT_EQ(r.lambda, 3);
  EXPECT_EQ(r.mu, 4);
}

void expect_matches_oracle(const Graph& g) {
  const auto oracle = testing::derived_oracle(g);
  const auto line = testing::edge_pairs(line_graph(g).graph);
  const auto gal = testing::edge_pairs(gallai(g).graph);
  const auto anti = testing::edge_pairs(anti_gallai(g).graph);
  EXPECT_EQ(line, oracle.line);
  EXPECT_EQ(gal, oracle.gallai);
  EXPECT_EQ(anti, oracle.anti_gallai);

  // Γ and Δ partition the edges of L.
  std::set<std::pair<std::size_t, std::size_t>> both;
  for (const auto& p : gal) {
    EXPECT_FALSE(anti.count(p));
    both.insert(p);
  }
  both.insert(anti.begin(), anti.end());
  EXPECT_EQ(both, line);
}

TEST(Operators, MatchVertexCentricOracleOnRandomGraphs) {
  std::mt19937 rng(testing::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    SCOPED_TRACE(trial);
    expect_matches_oracle(testing::random_order_graph(rng, 0, 20));
  }
}

TEST(Operators, MatchVertexCentricOracleOnCorpus) {
  for (const auto& entry : srg_corpus()) {
    SCOPED_TRACE(entry.label());
    expect_matches_oracle(entry.graph);
  }
}

// deg_Γ(uv) = d(u)+d(v)-2|N(u)∩N(v)|-2 and deg_Δ(uv) = 2|N(u)∩N(v)|.
TEST(Operators, DegreeFormulasVertexwise) {
  std::mt19937 rng(testing::kSeed + 2);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_order_graph(rng, 2, 18);
    const Graph gam = gallai(g).graph;
    const Graph del = anti_gallai(g).graph;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Edge e = g.edges()[i];
      const std::size_t c = common_neighbor_count(g, e.u, e.v);
      EXPECT_EQ(degree(gam, i), degree(g, e.u) + degree(g, e.v) - 2 * c - 2);
      EXPECT_EQ(degree(del, i), 2 * c);
    }
  }
}

// Δ(H ∨ K_1) = R(H) for triangle-free H, once Δ's vertices are renamed to
// R's convention: spoke (v, hub) becomes v, rim edge i becomes n + i.
TEST(Operators, AntiGallaiOfConeIsSemiTotalPoint) {
  for (const Graph& h : {cycle(4), cycle(5), cycle(6), path(4)}) {
    const std::size_t n = h.order();
    const Graph cone = join(h, complete(1));
    const auto delta = anti_gallai(cone);
    std::vector<Vertex> perm(delta.source_edges.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      const Edge e = delta.source_edges[i];
      perm[i] = e.v == n ? e.u : n + *h.edge_index(e);
    }
    EXPECT_EQ(relabel(delta.graph, perm), semi_total_point(h));
  }
}

TEST(Operators, RegularityOfDerivedGraphsOnCorpus) {
  for (const auto& entry : srg_corpus()) {
    const auto [n, k, lambda, mu] = entry.expected;
    expect_regular(gallai(entry.graph).graph, static_cast<std::size_t>(2 * (k - lambda - 1)));
    expect_regular(anti_gallai(entry.graph).graph, static_cast<std::size_t>(2 * lambda));
  }
}

}  // namespace
}  // namespace gallai
