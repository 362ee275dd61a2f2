#include <gtest/gtest.h>

#include "pairstab/constructors.hpp"
#include "pairstab/corpus.hpp"
#include "pairstab/fixtures.hpp"
#include "pairstab/scan.hpp"
#include "pairstab/search.hpp"

using namespace pairstab;

namespace {

ScanOptions small(int jobs) {
  ScanOptions o;
  o.corpus = generate_graphs(1, 5, true);
  o.corpus_descriptor = "generated:connected:1..5";
  o.n_min = 3;
  o.n_max = 7;
  o.jobs = jobs;
  return o;
}

const Json* find(const Json& report, const std::string& id, int n) {
  for (const auto& r : report["records"]) {
    if (r["graph"] == id && r["n"] == n) return &r;
  }
  return nullptr;
}

}  // namespace

TEST(Scan, DeterministicAcrossJobs) {
  EXPECT_EQ(run_scan(small(1)).dump(), run_scan(small(4)).dump());
}

TEST(Scan, NoCheckFailures) {
  const Json r = run_scan(small(2));
  EXPECT_TRUE(r["summary"]["check_failures"].empty()) << r["summary"]["check_failures"].dump();
  EXPECT_TRUE(r["summary"]["conjecture_counterexamples"].empty());
}

TEST(Scan, RecordsSortedAndTalliesConsistent) {
  const Json r = run_scan(small(2));
  const auto& recs = r["records"];
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto a = std::make_pair(recs[i - 1]["graph"].get<std::string>(), recs[i - 1]["n"].get<int>());
    const auto b = std::make_pair(recs[i]["graph"].get<std::string>(), recs[i]["n"].get<int>());
    ASSERT_LT(a, b);
  }
  int total = 0;
  for (const auto& [kind, count] : r["summary"]["verdicts"].items()) total += count.get<int>();
  EXPECT_EQ(total, static_cast<int>(recs.size()));
  EXPECT_EQ(r["summary"]["records"], recs.size());
}

TEST(Scan, HexagonTriangleSupportsTheFirstConjecture) {
  ScanOptions o;
  o.corpus = make_corpus({fixtures::hexagon_triangle()});
  o.n_min = 3;
  o.n_max = 6;
  const Json r = run_scan(o);
  const std::string id = canonical_id(fixtures::hexagon_triangle());
  const Json* c3 = find(r, id, 3);
  const Json* c6 = find(r, id, 6);
  ASSERT_NE(c3, nullptr);
  ASSERT_NE(c6, nullptr);
  EXPECT_EQ((*c3)["conjectures"]["incompatible-unstable"], "support");
  EXPECT_EQ((*c6)["conjectures"]["incompatible-unstable"], "support");
  EXPECT_EQ((*find(r, id, 5))["checks"]["odd-compatible-stable"], "pass");
}

TEST(Scan, EmptyCorpus) {
  ScanOptions o;
  const Json r = run_scan(o);
  EXPECT_TRUE(r["records"].empty());
  EXPECT_EQ(r["summary"]["records"], 0);
}

TEST(Scan, ExcludesThickAndDisconnected) {
  ScanOptions o;
  o.corpus = make_corpus({cycle(4), disjoint_union(cycle(3), cycle(3)), cycle(5)});
  const Json r = run_scan(o);
  EXPECT_EQ(r["excluded"].size(), 2u);
  EXPECT_EQ(r["corpus"]["included"], 1);
}

TEST(Scan, TimingOnlyWhenAsked) {
  ScanOptions o = small(1);
  o.n_max = 3;
  EXPECT_FALSE(run_scan(o)["records"][0].contains("timing_ms"));
  o.timing = true;
  EXPECT_TRUE(run_scan(o)["records"][0].contains("timing_ms"));
}

TEST(Scan, ReverseLabelsIsIsomorphic) {
  const Graph g = fixtures::hexagon_triangle();
  EXPECT_TRUE(are_isomorphic(g, reverse_labels(g)).has_value());
}
