#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pairstab/constructors.hpp"
#include "pairstab/errors.hpp"
#include "pairstab/graph.hpp"

using namespace pairstab;

TEST(Graph, RejectsLoopsAndBadVertices) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph(3, loop), InvalidInput);
  const std::vector<Edge> out{{0, 3}};
  EXPECT_THROW(Graph(3, out), InvalidInput);
}

TEST(Graph, DuplicateEdgesCollapse) {
  const std::vector<Edge> edges{{0, 1}, {1, 0}, {0, 1}};
  const Graph g(2, edges);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(oracle::graph_invariants_hold(g));
}

TEST(Graph, InvariantsOnAllSmallGraphs) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& g : oracle::labelled_graphs(n)) ASSERT_TRUE(oracle::graph_invariants_hold(g));
  }
}

TEST(Graph, Components) {
  const Graph g = disjoint_union(cycle(3), path(2));
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(comps[1], (std::vector<Vertex>{3, 4}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(Graph(1)));
}

TEST(Graph, Bipartite) {
  EXPECT_TRUE(is_bipartite(cycle(6)));
  EXPECT_FALSE(is_bipartite(cycle(5)));
  EXPECT_TRUE(is_bipartite(Graph(3)));
}

TEST(Graph, RThin) {
  EXPECT_FALSE(is_r_thin(cycle(4)));
  const auto w = r_thick_witness(cycle(4));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::pair<Vertex, Vertex>{0, 2}));
  EXPECT_TRUE(is_r_thin(cycle(5)));
  EXPECT_TRUE(is_r_thin(complete(4)));
  EXPECT_FALSE(is_r_thin(Graph(2)));  // two isolated vertices share the empty neighbourhood
}

TEST(Graph, Distances) {
  const Graph c = cycle(7);
  EXPECT_EQ(distance(c, 0, 3), 3);
  EXPECT_EQ(distance(c, 0, 4), 3);
  EXPECT_FALSE(distance(disjoint_union(c, Graph(1)), 0, 7).has_value());
}

TEST(Graph, CommonNeighboursAndIndependence) {
  const Graph k4 = complete(4);
  EXPECT_EQ(common_neighbors(k4, 0, 1), (std::vector<Vertex>{2, 3}));
  const std::vector<Vertex> s{2, 3};
  EXPECT_FALSE(is_independent_set(k4, s));
  const std::vector<Vertex> t{0, 2};
  EXPECT_TRUE(is_independent_set(cycle(4), t));
}
