#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "gallai/errors.hpp"
#include "gallai/generators.hpp"
#include "gallai/graph.hpp"
#include "test_support.hpp"

namespace gallai {
namespace {

TEST(Graph, EdgesAreNormalisedAndSorted) {
  const std::vector<Edge> edges{{3, 1}, {0, 2}, {1, 0}};
  const Graph g(4, edges);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[1], Edge(0, 2));
  EXPECT_EQ(g.edges()[2], Edge(1, 3));
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_FALSE(g.adjacent(2, 3));
  EXPECT_EQ(g.edge_index(Edge(3, 1)), 2u);
  EXPECT_FALSE(g.edge_index(Edge(2, 3)).has_value());
}

TEST(Graph, RejectsLoopsRepeatsAndRange) {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> repeat{{0, 1}, {1, 0}};
  const std::vector<Edge> range{{0, 4}};
  EXPECT_THROW(Graph(3, loop), InputError);
  EXPECT_THROW(Graph(3, repeat), InputError);
  EXPECT_THROW(Graph(4, range), InputError);
}

TEST(Graph, FromAdjacencyValidates) {
  EXPECT_THROW(Graph::from_adjacency(2, {0, 1, 0, 0}), InputError);
  EXPECT_THROW(Graph::from_adjacency(2, {1, 0, 0, 0}), InputError);
  EXPECT_THROW(Graph::from_adjacency(2, {0, 1, 1}), InputError);
  const Graph g = Graph::from_adjacency(3, {0, 1, 0, 1, 0, 1, 0, 1, 0});
  EXPECT_EQ(g, path(3));
}

TEST(Degree, Examples) {
  const Graph p = petersen();
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(degree(p, v), 3u);
  EXPECT_EQ(degree(empty_graph(5), 0), 0u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(degree(complete(4), v), 3u);
  EXPECT_THROW(degree(p, 10), InputError);
}

TEST(CommonNeighbors, PetersenLambdaAndMu) {
  const Graph p = petersen();
  for (Vertex u = 0; u < 10; ++u) {
    for (Vertex v = u + 1; v < 10; ++v) {
      const auto common = common_neighbors(p, u, v);
      EXPECT_EQ(common.size(), p.adjacent(u, v) ? 0u : 1u);
      EXPECT_EQ(common_neighbor_count(p, u, v), common.size());
    }
  }
}

TEST(CommonNeighbors, CompleteGraphAndErrors) {
  const Graph k4 = complete(4);
  EXPECT_EQ(common_neighbors(k4, 0, 3), VertexSet({1, 2}));
  EXPECT_EQ(common_neighbors(k4, 1, 2), VertexSet({0, 3}));
  EXPECT_THROW(common_neighbors(k4, 2, 2), InputError);
}

TEST(Distance, Examples) {
  const Graph p = petersen();
  for (Vertex u = 0; u < 10; ++u) {
    EXPECT_EQ(distance(p, u, u), 0u);
    for (Vertex v = 0; v < 10; ++v) {
      if (u != v && !p.adjacent(u, v)) EXPECT_EQ(distance(p, u, v), 2u);
    }
  }
  const std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  const Graph g(6, two_triangles);
  EXPECT_FALSE(distance(g, 0, 4).has_value());
  EXPECT_EQ(distance(g, 3, 5), 1u);
}

TEST(VertexSet, SortsAndDeduplicates) {
  const VertexSet s({4, 1, 4, 2});
  EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 2, 4}));
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(3));
}

TEST(Components, NumberedBySmallestMember) {
  const std::vector<Edge> edges{{1, 4}, {0, 3}};
  const Graph g(5, edges);
  std::size_t count = 0;
  const auto comp = connected_components(g, &count);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(comp, (std::vector<std::size_t>{0, 1, 2, 0, 1}));
}

TEST(InducedSubgraph, KeepsOrderOfRequestedVertices) {
  const Graph c = cycle(5);
  const std::vector<Vertex> pick{4, 0, 1};
  const Graph h = induced_subgraph(c, pick);
  EXPECT_EQ(h, path(3));
}

TEST(Relabel, MapsVertexToPermutedIndex) {
  const Graph p = path(3);
  const std::vector<Vertex> perm{1, 0, 2};
  const Graph r = relabel(p, perm);
  EXPECT_TRUE(r.adjacent(1, 0));
  EXPECT_TRUE(r.adjacent(0, 2));
  EXPECT_FALSE(r.adjacent(1, 2));
}

// Degree sum, symmetry of distance and the triangle inequality on random graphs.
TEST(GraphProperties, RandomGraphs) {
  std::mt19937 rng(testing::kSeed);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_order_graph(rng, 1, 18);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) sum += degree(g, v);
    EXPECT_EQ(sum, 2 * g.size());
    EXPECT_TRUE(std::is_sorted(g.edges().begin(), g.edges().end()));

    std::vector<std::vector<std::optional<std::size_t>>> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(distances_from(g, v));
    for (Vertex a = 0; a < g.order(); ++a) {
      for (Vertex b = 0; b < g.order(); ++b) {
        ASSERT_EQ(d[a][b], d[b][a]);
        EXPECT_EQ(distance(g, a, b), d[a][b]);
        for (Vertex c = 0; c < g.order(); ++c) {
          if (d[a][b] && d[b][c]) {
            ASSERT_TRUE(d[a][c].has_value());
            EXPECT_LE(*d[a][c], *d[a][b] + *d[b][c]);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace gallai
