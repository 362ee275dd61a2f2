#include "pairstab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "pairstab/constructors.hpp"
#include "pairstab/errors.hpp"
#include "pairstab/search.hpp"
#include "pairstab/stability.hpp"

namespace pairstab {

namespace {

constexpr const char* kVersion = "1.0.0";

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct GraphFacts {
  const CorpusEntry* entry = nullptr;
  bool bipartite = false;
  CompatibilityProfile profile;
  bool cn_condition = false;  // every Γ*-edge has a non-independent common neighbourhood
  TfDigraph tf;
  StabilityVerdict k2;
  Json record;
  std::string skipped;  // non-empty when phase 1 hit a bound
};

struct Instance {
  std::size_t graph = 0;
  int n = 0;
  Json record;
  std::string skipped;
  // Raw facts for the per-graph checks.
  bool unstable = false;
  bool nontrivially_unstable = false;
  bool compatible = false;
};

const char* status(bool ok) { return ok ? "pass" : "fail"; }

// The facts a conjecture conclusion depends on, recomputed from scratch.
struct Recheck {
  bool unstable = false;
  bool aut_exceeds_p = false;
};

Recheck recheck(const Graph& g, int n) {
  const Graph c = cycle(n);
  const std::uint64_t aut = product_automorphism_order(g, c);
  const std::uint64_t expected = automorphism_group(g).order() * automorphism_group(c).order();
  return {aut != expected, aut != layer_subgroup(g, c).order()};
}

// A conjecture counterexample must survive two independent recomputations:
// on the stored labelling and on the reversed one.
std::string conclude(bool holds, const Graph& g, int n, bool Recheck::*field) {
  if (holds) return "support";
  const bool again = recheck(g, n).*field || recheck(reverse_labels(g), n).*field;
  return again ? "inconsistent" : "counterexample";
}

void run_phase1(GraphFacts& f, const ScanOptions& opt) {
  const Graph& g = f.entry->graph;
  const auto t0 = Clock::now();
  f.bipartite = is_bipartite(g);
  f.profile = compatibility_profile(g);
  f.cn_condition = common_neighbourhoods_not_independent(g);
  Json& r = f.record;
  r["graph"] = f.entry->id;
  r["order"] = g.order();
  r["n"] = 2;
  r["sigma"] = "K2";
  try {
    f.tf = tf_digraph(g, opt.bound);
    f.k2 = pair_stability(g, complete(2));
  } catch (const BoundExceeded& e) {
    f.skipped = e.what();
    return;
  }
  r["hypotheses"] = Json{{"r_thin", true}, {"connected", true}, {"bipartite", f.bipartite}};
  r["verdict"] = to_json(f.k2);
  const std::uint64_t aut = f.k2.aut_g;
  const bool nondiagonal = f.tf.arc_count() > aut;
  r["nondiagonal_two_fold"] = nondiagonal;
  Json checks = Json::object();
  if (opt.theorems) {
    if (!f.bipartite) {
      // Unstable with K2 iff there is a nondiagonal two-fold automorphism.
      checks["two-fold-equivalence"] = status(nondiagonal == !f.k2.stable());
      try {
        const InstabilityMechanisms m = instability_mechanisms(g, opt.bound);
        r["mechanisms"] = Json{{"anti_automorphism", m.anti_automorphism}, {"cross_cover", m.cross_cover}};
        checks["mechanisms-imply-instability"] = status(m.consistent);
      } catch (const BoundExceeded&) {
        r["mechanisms"] = nullptr;
      }
    }
  }
  r["checks"] = checks;
  r["conjectures"] = Json::object();
  if (opt.timing) r["timing_ms"] = ms_since(t0);
}

void run_phase2(Instance& inst, const GraphFacts& f, const ScanOptions& opt) {
  const Graph& g = f.entry->graph;
  const int n = inst.n;
  const auto t0 = Clock::now();
  Json& r = inst.record;
  r["graph"] = f.entry->id;
  r["order"] = g.order();
  r["n"] = n;
  r["sigma"] = "C" + std::to_string(n);

  const bool compatible = is_compatible(f.profile, n).compatible;
  const bool some_non_bipartite = !f.bipartite || n % 2 == 1;
  const bool odd = n % 2 == 1;
  const auto independent_edge = independent_common_neighbourhood_edge(g);
  inst.compatible = compatible;
  r["hypotheses"] = Json{{"r_thin", true},
                         {"connected", true},
                         {"bipartite", f.bipartite},
                         {"compatible", compatible},
                         {"common_neighbourhoods_not_independent", f.cn_condition}};

  StabilityVerdict v;
  std::uint64_t p_order = 0;
  std::optional<SigmaAutomorphism> nondiagonal;
  try {
    v = pair_stability(g, cycle(n));
    p_order = layer_subgroup(g, cycle(n)).order();
    nondiagonal = find_nondiagonal_cycle_automorphism(f.tf, n);
  } catch (const BoundExceeded& e) {
    inst.skipped = e.what();
    return;
  }
  inst.unstable = !v.stable();
  inst.nontrivially_unstable = v.kind == VerdictKind::nontrivially_unstable;
  r["verdict"] = to_json(v);
  r["aut_layer_subgroup"] = p_order;
  r["nondiagonal_cycle_automorphism"] = nondiagonal ? to_json(*nondiagonal) : Json(nullptr);

  Json checks = Json::object();
  if (opt.theorems) {
    const bool base = n != 4 && some_non_bipartite;
    const bool nontrivial = v.kind == VerdictKind::nontrivially_unstable;
    if (base && compatible) {
      checks["nontrivial-iff-nondiagonal"] = status(nontrivial == nondiagonal.has_value());
      checks["aut-equals-layer-subgroup"] = status(v.aut_product == p_order);
    }
    if (base && odd && n >= 5 && f.cn_condition) {
      checks["nontrivial-iff-nondiagonal-odd"] = status(nontrivial == nondiagonal.has_value());
      checks["aut-equals-layer-subgroup-odd"] = status(v.aut_product == p_order);
    }
    if (odd && compatible) checks["odd-compatible-stable"] = status(v.stable());
    if (odd && n >= 5 && f.cn_condition) checks["odd-dependent-neighbourhoods-stable"] = status(v.stable());
    if (!f.bipartite && n % 2 == 0 && n >= 6 && compatible) {
      checks["even-nontrivial-iff-k2-unstable"] = status(nontrivial == !f.k2.stable());
    }
    // P(g, C_n) ≅ Aut_{C_n}(g) ⋊ Aut(C_n).
    checks["semidirect-order"] =
        status(p_order == count_cycle_automorphisms(f.tf, n) * static_cast<std::uint64_t>(2 * n));
    if (nondiagonal) {
      checks["nondiagonal-constraints"] = status(r_thin_constraint_violations(g, *nondiagonal).empty());
    }
    if (n != 4) {
      try {
        const FibreActionResult fa = fibre_action_check(g, n, opt.bound);
        if (fa.applicable) checks["fibre-action"] = status(fa.violations.empty());
      } catch (const BoundExceeded&) {
        checks["fibre-action"] = "skipped";
      }
    }
  }
  r["checks"] = checks;

  Json conj = Json::object();
  if (opt.conjectures) {
    if (n != 4 && some_non_bipartite && !compatible) {
      conj["incompatible-unstable"] = conclude(inst.unstable, g, n, &Recheck::unstable);
    }
    // Restricted to incompatible n: for compatible odd n stability is already forced.
    if (odd && !compatible && independent_edge) {
      conj["odd-incompatible-unexpected"] = conclude(v.aut_product != p_order, g, n, &Recheck::aut_exceeds_p);
    }
    if (!odd && n >= 4 && !compatible) {
      conj["even-incompatible-unexpected"] = conclude(v.aut_product != p_order, g, n, &Recheck::aut_exceeds_p);
    }
  }
  r["conjectures"] = conj;
  if (opt.timing) r["timing_ms"] = ms_since(t0);
}

// Checks spanning several n for one graph, attached to its K2 record.
void per_graph_checks(GraphFacts& f, const std::vector<const Instance*>& insts) {
  if (f.bipartite || !f.skipped.empty()) return;
  const bool k2_unstable = !f.k2.stable();
  bool any_even = false;
  bool all_even_unstable = true;
  bool some_even_stable = false;
  bool c_hyp = false;
  bool c_all_unstable = true;
  for (const Instance* i : insts) {
    if (!i->skipped.empty() || i->n % 2 != 0) continue;
    any_even = true;
    all_even_unstable = all_even_unstable && i->unstable;
    some_even_stable = some_even_stable || !i->unstable;
    if (i->n >= 6) {
      c_hyp = c_hyp || (i->compatible && i->nontrivially_unstable);
      c_all_unstable = c_all_unstable && i->unstable;
    }
  }
  Json& checks = f.record["checks"];
  if (any_even) {
    // Unstable with K2 forces every even cycle; stable with K2 needs some
    // stable even cycle, which a finite range may not contain.
    if (k2_unstable) {
      checks["k2-even-cycle-equivalence"] = status(all_even_unstable);
    } else {
      checks["k2-even-cycle-equivalence"] = some_even_stable ? "pass" : "unresolved";
    }
  }
  if (c_hyp) checks["even-nontrivial-forces-even-unstable"] = status(c_all_unstable);
}

}  // namespace

Graph reverse_labels(const Graph& g) {
  std::vector<Edge> edges;
  const int last = g.order() - 1;
  for (auto [u, v] : g.edges()) edges.emplace_back(last - u, last - v);
  return Graph(g.order(), edges);
}

Json run_scan(const ScanOptions& opt) {
  if (opt.n_min < 3 || opt.n_max < opt.n_min) throw InvalidInput("scan needs 3 <= n-min <= n-max");

  Json excluded = Json::array();
  std::vector<GraphFacts> facts;
  for (const auto& e : opt.corpus) {
    std::string why;
    if (e.graph.order() < 2) {
      why = "fewer than two vertices";
    } else if (!is_connected(e.graph)) {
      why = "disconnected";
    } else if (auto w = r_thick_witness(e.graph)) {
      why = "not R-thin: N(" + std::to_string(w->first) + ") = N(" + std::to_string(w->second) + ")";
    }
    if (!why.empty()) {
      excluded.push_back({{"graph", e.id}, {"reason", why}});
      continue;
    }
    facts.push_back(GraphFacts{});
    facts.back().entry = &e;
  }

  parallel_for(facts.size(), opt.jobs, [&](std::size_t i) { run_phase1(facts[i], opt); });

  std::vector<Instance> insts;
  for (std::size_t gi = 0; gi < facts.size(); ++gi) {
    if (!facts[gi].skipped.empty()) continue;
    for (int n = opt.n_min; n <= opt.n_max; ++n) insts.push_back(Instance{gi, n, Json::object(), "", false, false, false});
  }
  parallel_for(insts.size(), opt.jobs, [&](std::size_t i) { run_phase2(insts[i], facts[insts[i].graph], opt); });

  std::vector<std::vector<const Instance*>> by_graph(facts.size());
  for (const auto& i : insts) by_graph[i.graph].push_back(&i);
  if (opt.theorems) {
    for (std::size_t gi = 0; gi < facts.size(); ++gi) per_graph_checks(facts[gi], by_graph[gi]);
  }

  Json records = Json::array();
  Json skipped = Json::array();
  std::map<std::string, std::map<std::string, int>> check_tally;
  std::map<std::string, std::map<std::string, int>> conj_tally;
  std::map<std::string, int> verdict_tally;
  auto absorb = [&](const Json& r) {
    for (const auto& [name, st] : r["checks"].items()) ++check_tally[name][st.get<std::string>()];
    for (const auto& [name, st] : r["conjectures"].items()) ++conj_tally[name][st.get<std::string>()];
    ++verdict_tally[r["verdict"]["kind"].get<std::string>()];
    records.push_back(r);
  };
  for (std::size_t gi = 0; gi < facts.size(); ++gi) {
    const GraphFacts& f = facts[gi];
    if (!f.skipped.empty()) {
      skipped.push_back({{"graph", f.entry->id}, {"n", nullptr}, {"reason", f.skipped}});
      continue;
    }
    absorb(f.record);
    for (const Instance* i : by_graph[gi]) {
      if (!i->skipped.empty()) {
        skipped.push_back({{"graph", f.entry->id}, {"n", i->n}, {"reason", i->skipped}});
      } else {
        absorb(i->record);
      }
    }
  }
  auto by_key = [](const Json& a, const Json& b) {
    return std::make_pair(a["graph"].get<std::string>(), a["n"].get<int>()) <
           std::make_pair(b["graph"].get<std::string>(), b["n"].get<int>());
  };
  std::sort(records.begin(), records.end(), by_key);

  Json counterexamples = Json::array();
  for (const auto& r : records) {
    for (const auto& [name, st] : r["conjectures"].items()) {
      if (st == "counterexample") counterexamples.push_back({{"graph", r["graph"]}, {"n", r["n"]}, {"conjecture", name}});
    }
  }
  Json failures = Json::array();
  for (const auto& r : records) {
    for (const auto& [name, st] : r["checks"].items()) {
      if (st == "fail") failures.push_back({{"graph", r["graph"]}, {"n", r["n"]}, {"check", name}});
    }
  }

  Json report;
  report["tool"] = "pairstab";
  report["version"] = kVersion;
  report["schema"] = kReportSchema;
  report["corpus"] = Json{{"source", opt.corpus_descriptor},
                          {"graphs", opt.corpus.size()},
                          {"included", facts.size()},
                          {"excluded", excluded.size()}};
  report["parameters"] = Json{{"n_min", opt.n_min},
                              {"n_max", opt.n_max},
                              {"theorems", opt.theorems},
                              {"conjectures", opt.conjectures},
                              {"bound", opt.bound}};
  report["summary"] = Json{{"records", records.size()},
                           {"skipped", skipped.size()},
                           {"verdicts", verdict_tally},
                           {"checks", check_tally},
                           {"conjectures", conj_tally},
                           {"check_failures", failures},
                           {"conjecture_counterexamples", counterexamples}};
  report["records"] = std::move(records);
  report["skipped"] = std::move(skipped);
  report["excluded"] = std::move(excluded);
  return report;
}

}  // namespace pairstab
