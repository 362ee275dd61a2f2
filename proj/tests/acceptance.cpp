// Acceptance run: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "pairstab/constructors.hpp"
#include "pairstab/corpus.hpp"
#include "pairstab/errors.hpp"
#include "pairstab/fixtures.hpp"
#include "pairstab/graph6.hpp"
#include "pairstab/json_io.hpp"
#include "pairstab/search.hpp"
#include "pairstab/stability.hpp"
#include "pairstab/twist.hpp"

using namespace pairstab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "first failure: " << what << "; ";
      ok = false;
    }
  }
};

std::vector<CorpusEntry> r_thin_connected(int max_order) {
  std::vector<CorpusEntry> out;
  for (auto& e : generate_graphs(1, max_order, true)) {
    if (e.graph.order() >= 2 && is_r_thin(e.graph)) out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::array<int, 4>> rows_of(std::span<const fixtures::TableEntry> t) {
  std::vector<std::array<int, 4>> rows;
  for (const auto& e : t) rows.push_back({e.u_from, e.i_from, e.u_to, e.i_to});
  return rows;
}

// 1
void hexagon_gamma_star(Outcome& o) {
  const Graph g = fixtures::hexagon_triangle();
  const Graph star = gamma_star(g);
  o.require(star == oracle::gamma_star(g), "gamma-star matches the definitional construction");
  const auto comps = connected_components(star);
  o.require(comps.size() == 2, "two components");
  for (const auto& c : comps) {
    const Graph h = induced_subgraph(star, c).graph;
    o.require(h.order() == 3 && h.edge_count() == 3, "component is a triangle");
  }
  const auto prof = compatibility_profile(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    o.require(prof.lengths[u].lengths == std::set<int>{3}, "L(u) = {3}");
    const auto lens = oracle::cycle_lengths_through(star, u);
    o.require(lens == std::vector<int>{3}, "oracle cycle lengths through u = {3}");
  }
  std::set<int> incompatible;
  for (int n = 3; n <= 12; ++n) {
    if (!is_compatible(prof, n).compatible) incompatible.insert(n);
  }
  o.require(incompatible == std::set<int>{3, 6}, "incompatible set is {3,6}");
  o.note << "components=" << comps.size() << " incompatible={3,6}";
}

// 2
void explicit_product_automorphisms(Outcome& o) {
  const Graph g = fixtures::hexagon_triangle();
  struct Case {
    const char* name;
    std::span<const fixtures::TableEntry> table;
    int n;
    std::size_t entries;
  };
  for (const Case& c : {Case{"sigma", fixtures::sigma_c3_table(), 3, 18},
                        Case{"tau", fixtures::tau_c6_table(), 6, 36}}) {
    const std::string name = c.name;
    o.require(c.table.size() == c.entries, name + " table size");
    const ProductGraph p = direct_product(g, cycle(c.n));
    const Permutation s = fixtures::table_permutation(c.table, g.order(), c.n);
    o.require(is_automorphism(p.graph, s), name + " is an automorphism");
    o.require(oracle::table_preserves_product_edges(g, c.n, rows_of(c.table)),
              name + " preserves edges (oracle)");
    o.require(!preserves_layers(p, s), name + " breaks the layer partition");
    // Independent layer check: some pair in one layer lands in two layers.
    bool split = false;
    for (Vertex u = 0; u < g.order() && !split; ++u) {
      for (Vertex v = 0; v < g.order() && !split; ++v) {
        split = p.layer(s.at(p.encode(u, 0))) != p.layer(s.at(p.encode(v, 0)));
      }
    }
    o.require(split, name + " splits layer 0 (oracle)");
  }
  o.note << "sigma 18 entries, tau 36 entries";
}

// 3
void hexagon_verdicts(Outcome& o) {
  const Graph g = fixtures::hexagon_triangle();
  const auto k2 = pair_stability(g, complete(2));
  const auto c3 = pair_stability(g, cycle(3));
  const auto c6 = pair_stability(g, cycle(6));
  o.require(k2.stable() && k2.aut_product == k2.aut_g * k2.aut_s, "(G,K2) stable by orders");
  o.require(!c3.stable() && c3.aut_product != c3.aut_g * c3.aut_s, "(G,C3) unstable by orders");
  o.require(!c6.stable() && c6.aut_product != c6.aut_g * c6.aut_s, "(G,C6) unstable by orders");
  o.note << "K2 " << k2.aut_product << "=" << k2.aut_g << "*" << k2.aut_s << ", C3 " << c3.aut_product
         << "!=" << c3.aut_g * c3.aut_s << ", C6 " << c6.aut_product << "!=" << c6.aut_g * c6.aut_s;
}

// 4
void hexagon_c5(Outcome& o) {
  const Graph g = fixtures::hexagon_triangle();
  const ProductGraph p = direct_product(g, cycle(5));
  const std::uint64_t refined = automorphism_group(p.graph).order();
  const std::uint64_t brute = brute_force_automorphisms(p.graph, 100'000).size();
  const std::uint64_t aut_g = oracle::automorphisms(g).size();
  o.require(aut_g == automorphism_group(g).order(), "|Aut(G)| agrees with the oracle");
  o.require(refined == brute, "product order: refined = brute force");
  o.require(refined == aut_g * 10, "|Aut(G x C5)| = |Aut(G)| * 10");
  o.require(pair_stability(g, cycle(5)).stable(), "(G,C5) stable");
  o.note << "|Aut(G x C5)| refined=" << refined << " brute=" << brute << " |Aut(G)|*10=" << aut_g * 10;
}

// 5
void layer_subgroup_property(Outcome& o) {
  int instances = 0;
  for (const auto& e : r_thin_connected(6)) {
    const Graph& g = e.graph;
    const auto prof = compatibility_profile(g);
    const bool cn = common_neighbourhoods_not_independent(g);
    for (int n : {3, 5, 6, 8}) {
      const bool some_non_bipartite = !is_bipartite(g) || n % 2 == 1;
      const bool a = is_compatible(prof, n).compatible;
      const bool b = n >= 5 && n % 2 == 1 && cn;
      if (!some_non_bipartite || !(a || b)) continue;
      ++instances;
      const std::uint64_t aut = product_automorphism_order(g, cycle(n));
      const std::uint64_t pg = layer_subgroup(g, cycle(n)).order();
      o.require(aut == pg, "|Aut(G x C" + std::to_string(n) + ")| = |P| for " + e.id);
    }
  }
  o.require(instances > 0, "some instance satisfies the hypotheses");
  o.note << instances << " instances";
}

// 6
void k2_even_cycle_equivalence(Outcome& o) {
  int graphs = 0;
  int unstable = 0;
  int max_k_used = 2;
  for (const auto& e : r_thin_connected(6)) {
    const Graph& g = e.graph;
    if (is_bipartite(g)) continue;
    ++graphs;
    const bool k2_unstable = !is_stable_pair(g, complete(2));
    if (k2_unstable) {
      ++unstable;
      for (int k : {2, 3}) {
        o.require(!is_stable_pair(g, cycle(2 * k)), "K2-unstable forces C" + std::to_string(2 * k) + " unstable for " + e.id);
      }
    } else {
      // "Unstable for every k" must fail: find a stable even cycle.
      bool found = false;
      for (int k = 2; k <= 8 && !found; ++k) {
        found = is_stable_pair(g, cycle(2 * k));
        if (found) max_k_used = std::max(max_k_used, k);
      }
      o.require(found, "K2-stable graph " + e.id + " has a stable even cycle with k <= 8");
    }
  }
  o.note << graphs << " graphs, " << unstable << " K2-unstable; stable witnesses needed k <= " << max_k_used;
}

// 7
void oracle_equivalence(Outcome& o) {
  constexpr std::uint64_t kCap = 200'000;
  int enumerated = 0;
  int counted = 0;
  int two_fold = 0;
  for (const auto& e : generate_graphs(1, 5, false)) {
    const Graph& g = e.graph;
    const auto tf = two_fold_group(g);
    o.require(tf == two_fold_group_direct(g), "two-fold group vs direct search on " + e.id);
    o.require(tf == oracle::two_fold_pairs(g), "two-fold group vs all pairs on " + e.id);
    ++two_fold;
    const TfDigraph d = tf_digraph(g);
    for (int n : {3, 4, 5}) {
      const std::uint64_t count = count_cycle_automorphisms(d, n);
      if (count <= kCap) {
        const auto fast = cycle_automorphisms(d, n, kCap);
        const auto slow = sigma_automorphisms_brute_force(g, cycle(n), kCap);
        o.require(fast == slow, "C" + std::to_string(n) + "-automorphisms on " + e.id);
        o.require(fast.size() == count && count == oracle::count_cycle_tuples(g, n),
                  "walk count on " + e.id);
        ++enumerated;
        continue;
      }
      // Too many to list: compare against a definitional closed-walk count.
      o.require(count == oracle::count_cycle_tuples(g, n),
                "C" + std::to_string(n) + "-automorphism count on " + e.id);
      ++counted;
    }
  }
  o.note << two_fold << " graphs; " << enumerated << " (graph,n) listed, " << counted
         << " compared by count";
}

bool r_thin_constraints_hold(const Graph& g, const SigmaAutomorphism& s) {
  std::set<std::uint64_t> orders;
  for (const auto& a : s.tuple) {
    if (is_automorphism(g, a)) return false;
    orders.insert(order_of(a));
  }
  if (orders.size() != 1) return false;
  for (auto [i, j] : s.sigma.edges()) {
    if (s.tuple[i] == s.tuple[j]) return false;
  }
  return true;
}

// 8
void r_thin_structure(Outcome& o) {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  for (const auto& e : r_thin_connected(6)) {
    const Graph& g = e.graph;
    const TfDigraph d = tf_digraph(g);
    for (const auto& t : two_fold_group(g)) {
      if (t.first == t.second) continue;
      const SigmaAutomorphism s{complete(2), {t.first, t.second}};
      o.require(r_thin_constraints_hold(g, s), "two-fold constraints on " + e.id);
      o.require(r_thin_constraint_violations(g, s).empty(), "library agrees on " + e.id);
      ++checked;
    }
    for (int n = 3; n <= 8; ++n) {
      if (count_cycle_automorphisms(d, n) > 1'000'000) {
        ++skipped;
        continue;
      }
      for (const auto& s : cycle_automorphisms(d, n, 1'000'000)) {
        if (!is_nondiagonal(s)) continue;
        o.require(r_thin_constraints_hold(g, s), "C" + std::to_string(n) + " constraints on " + e.id);
        o.require(r_thin_constraint_violations(g, s).empty(), "library agrees on " + e.id);
        ++checked;
      }
    }
    if (auto s = pair_stability(g, cycle(6)).witness; s && s->tuple) {
      o.require(r_thin_constraints_hold(g, *s->tuple), "verdict witness on " + e.id);
      ++checked;
    }
  }
  o.require(checked > 0, "some nondiagonal tuple was examined");
  o.require(skipped == 0, "no instance skipped");
  o.note << checked << " nondiagonal tuples checked";
}

// 9
void twist_soundness(Outcome& o) {
  const fs::path dir = fs::path(PAIRSTAB_TEST_DATA) / "twists";
  std::vector<fs::path> valid;
  std::vector<fs::path> invalid;
  for (const auto& f : fs::directory_iterator(dir / "valid")) valid.push_back(f.path());
  for (const auto& f : fs::directory_iterator(dir / "invalid")) invalid.push_back(f.path());
  std::sort(valid.begin(), valid.end());
  std::sort(invalid.begin(), invalid.end());
  int nontrivial = 0;
  for (const auto& path : valid) {
    const std::string name = path.filename().string();
    std::ifstream in(path);
    const TwistSpec spec = twist_from_json(Json::parse(in));
    const TwistGraph t = twist_construct(spec);
    o.require(oracle::graph_invariants_hold(t.graph), "graph invariants for " + name);
    const auto [edges, vertices] = oracle::twist_shape(spec);
    o.require(t.graph.order() == static_cast<int>(vertices) &&
                  t.graph.edge_count() == static_cast<std::size_t>(edges),
              "shape matches coset construction for " + name);
    const auto [a, b] = twist_two_fold(spec, t);
    o.require(is_two_fold(t.graph, a, b) && a != b, "carried two-fold pair for " + name);
    if (is_r_thin(t.graph) && is_connected(t.graph) && !is_bipartite(t.graph)) {
      ++nontrivial;
      o.require(!is_stable_pair(t.graph, complete(2)), "twist unstable: " + name);
    }
  }
  for (const auto& path : invalid) {
    std::ifstream in(path);
    bool rejected = false;
    try {
      twist_construct(twist_from_json(Json::parse(in)));
    } catch (const InvalidInput&) {
      rejected = true;
    }
    o.require(rejected, "invalid spec rejected: " + path.filename().string());
  }
  o.require(nontrivial > 0, "some twist is R-thin, connected and non-bipartite");
  o.note << valid.size() << " valid (" << nontrivial << " R-thin connected non-bipartite), "
         << invalid.size() << " invalid";
}

// 10
void engine_sanity(Outcome& o) {
  for (int n = 3; n <= 12; ++n) {
    o.require(automorphism_group(cycle(n)).order() == static_cast<std::uint64_t>(2 * n),
              "|Aut(C" + std::to_string(n) + ")|");
  }
  for (int n = 1; n <= 7; ++n) {
    o.require(automorphism_group(complete(n)).order() == oracle::factorial(n),
              "|Aut(K" + std::to_string(n) + ")|");
  }
  for (int n = 3; n <= 12; ++n) {
    const Graph b = boolean_square(cycle(n));
    const auto comps = connected_components(b);
    if (n % 2 == 1) {
      o.require(comps.size() == 1 && are_isomorphic(b, cycle(n)).has_value(),
                "B(C" + std::to_string(n) + ") = C" + std::to_string(n));
    } else {
      o.require(comps.size() == 2, "B(C" + std::to_string(n) + ") has two components");
      for (const auto& c : comps) {
        const Graph h = induced_subgraph(b, c).graph;
        const Graph want = n == 4 ? complete(2) : cycle(n / 2);
        o.require(are_isomorphic(h, want).has_value(), "B(C" + std::to_string(n) + ") component shape");
      }
    }
  }
  std::size_t round_trips = 0;
  for (int n = 0; n <= 5; ++n) {
    for (const auto& g : oracle::labelled_graphs(n)) {
      const std::string s = emit_graph6(g);
      o.require(parse_graph6(s) == g, "parse(emit(g)) = g");
      o.require(emit_graph6(parse_graph6(s)) == s, "emit(parse(s)) = s");
      ++round_trips;
    }
  }
  o.note << "cycles 3..12, complete 1..7, " << round_trips << " graph6 round trips";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "hexagon-triangle gamma-star, L(u) and compatibility", 1, hexagon_gamma_star},
      {2, "explicit automorphisms outside the layer subgroup", 1, explicit_product_automorphisms},
      {3, "hexagon-triangle verdicts for K2, C3, C6", 10, hexagon_verdicts},
      {4, "hexagon-triangle with C5 is stable", 60, hexagon_c5},
      {5, "Aut(G x C_n) = P(G, C_n) under the hypotheses", 1800, layer_subgroup_property},
      {6, "K2 instability versus even-cycle instability", 1800, k2_even_cycle_equivalence},
      {7, "digraph method and two-fold group against definitional search", 1e9, oracle_equivalence},
      {8, "structure of nondiagonal tuples over R-thin graphs", 1e9, r_thin_structure},
      {9, "twist fixtures are sound and unstable", 1e9, twist_soundness},
      {10, "engine sanity: cycles, complete graphs, Boolean squares, graph6", 60, engine_sanity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      o.ok = false;
      o.note << "; took " << secs << "s, limit " << c.limit_s << "s";
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " ["
              << o.note.str() << "] (" << std::fixed;
    std::cout.precision(3);
    std::cout << secs << "s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
