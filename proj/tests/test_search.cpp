#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pairstab/constructors.hpp"
#include "pairstab/corpus.hpp"
#include "pairstab/errors.hpp"
#include "pairstab/search.hpp"

using namespace pairstab;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& p) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(p[u], p[v]);
  return Graph(g.order(), edges);
}

}  // namespace

TEST(Search, OrderMatchesAllPermutationsOracle) {
  for (const auto& e : generate_graphs(1, 6, false)) {
    const auto oracle_elems = oracle::automorphisms(e.graph);
    ASSERT_EQ(automorphism_group(e.graph).order(), oracle_elems.size()) << e.id;
  }
}

TEST(Search, GeneratorsGenerateTheWholeGroup) {
  for (const auto& e : generate_graphs(1, 6, true)) {
    const PermutationGroup grp = automorphism_group(e.graph);
    for (const auto& p : grp.generators()) ASSERT_TRUE(is_automorphism(e.graph, p));
    ASSERT_EQ(enumerate_elements(grp, 1'000'000), oracle::automorphisms(e.graph)) << e.id;
  }
}

TEST(Search, BruteForceMatchesOracle) {
  for (const auto& e : generate_graphs(1, 5, false)) {
    ASSERT_EQ(brute_force_automorphisms(e.graph, 1'000'000), oracle::automorphisms(e.graph)) << e.id;
  }
}

TEST(Search, ColoursRestrictTheGroup) {
  const Graph c6 = cycle(6);
  const std::vector<int> colours{0, 1, 0, 1, 0, 1};
  EXPECT_EQ(automorphism_group(c6, colours).order(), 6u);
}

TEST(Search, KnownOrders) {
  EXPECT_EQ(automorphism_group(Graph(5)).order(), 120u);
  EXPECT_EQ(automorphism_group(disjoint_union(cycle(3), cycle(3))).order(), 72u);
  EXPECT_EQ(automorphism_group(direct_product(complete(3), complete(3)).graph).order(), 72u);
}

TEST(Search, NodeBudget) {
  SearchOptions tight;
  tight.node_budget = 3;
  EXPECT_THROW(automorphism_group(Graph(8), {}, tight), BoundExceeded);
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937 rng(12345);
  for (const auto& e : generate_graphs(1, 7, true)) {
    std::vector<Vertex> p(e.graph.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const Graph h = relabel(e.graph, p);
    ASSERT_EQ(canonical_labeling(h).form, canonical_labeling(e.graph).form) << e.id;
    const auto iso = are_isomorphic(e.graph, h);
    ASSERT_TRUE(iso.has_value());
    for (auto [u, v] : e.graph.edges()) ASSERT_TRUE(h.adjacent(iso->at(u), iso->at(v)));
  }
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  EXPECT_FALSE(are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))).has_value());
  EXPECT_FALSE(are_isomorphic(path(4), Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}})).has_value());
  EXPECT_FALSE(are_isomorphic(cycle(5), cycle(6)).has_value());
}
