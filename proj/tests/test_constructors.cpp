#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pairstab/constructors.hpp"
#include "pairstab/errors.hpp"
#include "pairstab/search.hpp"

using namespace pairstab;

TEST(Constructors, Families) {
  EXPECT_EQ(cycle(5).edge_count(), 5u);
  EXPECT_EQ(complete(5).edge_count(), 10u);
  EXPECT_EQ(path(4).edge_count(), 3u);
  EXPECT_THROW(cycle(2), InvalidInput);
  EXPECT_THROW(complete(0), InvalidInput);
}

TEST(Constructors, ProductAdjacencyIsDefinitional) {
  for (const auto& g : oracle::labelled_graphs(4)) {
    const ProductGraph p = direct_product(g, cycle(3));
    ASSERT_TRUE(oracle::graph_invariants_hold(p.graph));
    for (Vertex a = 0; a < p.graph.order(); ++a) {
      for (Vertex b = 0; b < p.graph.order(); ++b) {
        const auto [u, i] = p.decode(a);
        const auto [v, j] = p.decode(b);
        ASSERT_EQ(p.graph.adjacent(a, b), g.adjacent(u, v) && cycle(3).adjacent(i, j));
      }
    }
  }
}

TEST(Constructors, DoubleCover) {
  EXPECT_TRUE(are_isomorphic(double_cover(cycle(5)).graph, cycle(10)).has_value());
  EXPECT_TRUE(are_isomorphic(double_cover(complete(3)).graph, cycle(6)).has_value());
  const auto d = double_cover(cycle(4)).graph;
  EXPECT_EQ(connected_components(d).size(), 2u);
}

TEST(Constructors, BooleanSquare) {
  EXPECT_TRUE(are_isomorphic(boolean_square(cycle(5)), cycle(5)).has_value());
  EXPECT_EQ(boolean_square(complete(4)), complete(4));
  EXPECT_EQ(boolean_square(path(3)).edge_count(), 1u);
}

TEST(Constructors, QuotientByGroup) {
  const Graph c6 = cycle(6);
  const std::vector<Permutation> gens{Permutation::rotation(6, 3)};
  const Quotient q = quotient_by_group(c6, gens);
  EXPECT_TRUE(are_isomorphic(q.graph, cycle(3)).has_value());
  EXPECT_EQ(q.blocks[0], (std::vector<Vertex>{0, 3}));
  const std::vector<Permutation> bad{Permutation::transposition(6, 0, 1)};
  EXPECT_THROW(quotient_by_group(c6, bad), InvalidInput);
}

TEST(Constructors, QuotientByPartitionValidates) {
  const std::vector<std::vector<Vertex>> overlap{{0, 1}, {1, 2}};
  EXPECT_THROW(quotient_by_partition(path(3), overlap), InvalidInput);
}

TEST(Constructors, LiftsAreAutomorphisms) {
  const Graph g = complete(3);
  const ProductGraph p = direct_product(g, cycle(5));
  EXPECT_TRUE(is_automorphism(p.graph, lift_left(p, Permutation::rotation(3, 1))));
  EXPECT_TRUE(is_automorphism(p.graph, lift_right(p, Permutation::reflection(5))));
}
