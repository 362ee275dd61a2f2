#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pairstab/constructors.hpp"
#include "pairstab/corpus.hpp"
#include "pairstab/errors.hpp"
#include "pairstab/examples.hpp"
#include "pairstab/graph6.hpp"
#include "pairstab/json_io.hpp"
#include "pairstab/scan.hpp"
#include "pairstab/search.hpp"
#include "pairstab/stability.hpp"
#include "pairstab/twist.hpp"

using namespace pairstab;

namespace {

constexpr int kOk = 0;
constexpr int kAssertion = 1;
constexpr int kMalformed = 2;
constexpr int kBound = 3;

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

Json generators_json(const PermutationGroup& grp) {
  Json gens = Json::array();
  for (const auto& p : grp.generators()) gens.push_back(to_json(p));
  return gens;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability of direct products of graphs"};
  app.require_subcommand(1);
  int rc = kOk;

  std::string file;
  std::string file_b;
  std::string out_path;
  int n = 0;

  auto* aut = app.add_subcommand("aut", "Automorphism group order and generators");
  aut->add_option("file", file, "graph6 file")->required();
  aut->callback([&] {
    const Graph g = read_graph(file);
    const PermutationGroup grp = automorphism_group(g);
    print(Json{{"graph", emit_graph6(g)}, {"vertices", g.order()}, {"order", grp.order()},
               {"generators", generators_json(grp)}});
  });

  auto* product = app.add_subcommand("product", "Direct product of two graphs");
  product->add_option("fileA", file, "graph6 file")->required();
  product->add_option("fileB", file_b, "graph6 file")->required();
  product->add_option("-o,--output", out_path, "graph6 output file")->required();
  product->callback([&] {
    const ProductGraph p = direct_product(read_graph(file), read_graph(file_b));
    write_text(out_path, emit_graph6(p.graph) + "\n");
    print(Json{{"vertices", p.graph.order()}, {"edges", p.graph.edge_count()}, {"output", out_path}});
  });

  auto* cover = app.add_subcommand("double-cover", "Canonical double cover G x K2 as graph6");
  cover->add_option("file", file, "graph6 file")->required();
  cover->callback([&] { std::cout << emit_graph6(double_cover(read_graph(file)).graph) << "\n"; });

  auto* square = app.add_subcommand("boolean-square", "Boolean square as graph6");
  square->add_option("file", file, "graph6 file")->required();
  square->callback([&] { std::cout << emit_graph6(boolean_square(read_graph(file))) << "\n"; });

  auto* star = app.add_subcommand("gamma-star", "Auxiliary graph and cycle-length sets");
  star->add_option("file", file, "graph6 file")->required();
  star->callback([&] {
    const CompatibilityProfile prof = compatibility_profile(read_graph(file));
    Json lengths = Json::array();
    for (const auto& ls : prof.lengths) lengths.push_back(ls.lengths);
    Json comps = Json::array();
    for (const auto& c : connected_components(prof.gamma_star)) comps.push_back(c);
    print(Json{{"gamma_star", emit_graph6(prof.gamma_star)},
               {"edges", prof.gamma_star.edges()},
               {"components", comps},
               {"L", lengths}});
  });

  auto* compat = app.add_subcommand("compat", "Is n compatible with the graph");
  compat->add_option("file", file, "graph6 file")->required();
  compat->add_option("--n", n, "cycle length")->required()->check(CLI::Range(3, 1 << 20));
  compat->callback([&] {
    const Compatibility c = is_compatible(read_graph(file), n);
    print(Json{{"n", n}, {"compatible", c.compatible},
               {"witness", c.witness ? Json(*c.witness) : Json(nullptr)}});
  });

  auto* rthin = app.add_subcommand("rthin", "R-thinness with a twin pair when thick");
  rthin->add_option("file", file, "graph6 file")->required();
  rthin->callback([&] {
    const auto w = r_thick_witness(read_graph(file));
    print(Json{{"r_thin", !w.has_value()}, {"witness", w ? Json{w->first, w->second} : Json(nullptr)}});
  });

  int cycle_n = 0;
  bool with_k2 = false;
  auto* pair = app.add_subcommand("pair", "Stability verdict for (G, C_n) or (G, K2)");
  pair->add_option("file", file, "graph6 file")->required();
  auto* cyc_opt = pair->add_option("--cycle", cycle_n, "cycle length")->check(CLI::Range(3, 1 << 20));
  auto* k2_opt = pair->add_flag("--k2", with_k2, "pair with K2");
  cyc_opt->excludes(k2_opt);
  pair->callback([&] {
    if (!with_k2 && cycle_n == 0) throw InvalidInput("pair needs --cycle <n> or --k2");
    const Graph g = read_graph(file);
    print(to_json(pair_stability(g, with_k2 ? complete(2) : cycle(cycle_n))));
  });

  auto* twist = app.add_subcommand("twist", "Validate and build a twist from a JSON spec");
  twist->add_option("spec", file, "twist spec JSON")->required();
  twist->callback([&] {
    std::ifstream in(file);
    if (!in) throw InvalidInput("cannot read " + file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InvalidInput(std::string("invalid JSON: ") + e.what());
    }
    const TwistSpec spec = twist_from_json(j);
    const TwistGraph t = twist_construct(spec);
    const auto [a, b] = twist_two_fold(spec, t);
    const StabilityVerdict v = pair_stability(t.graph, complete(2));
    print(Json{{"graph", emit_graph6(t.graph)},
               {"vertices", t.graph.order()},
               {"r_thin", is_r_thin(t.graph)},
               {"connected", is_connected(t.graph)},
               {"bipartite", is_bipartite(t.graph)},
               {"two_fold", Json{to_json(a), to_json(b)}},
               {"k2_verdict", to_json(v)}});
  });

  auto* verify = app.add_subcommand("verify-examples", "Reproduce the worked examples");
  verify->callback([&] {
    for (const auto& c : verify_worked_examples()) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
      if (!c.passed) rc = kAssertion;
    }
  });

  ScanOptions scan_opt;
  std::string corpus_path;
  int gen_max = 6;
  bool only_conj = false;
  bool only_thm = false;
  auto* scan = app.add_subcommand("scan", "Corpus scan over theorem checks and conjectures");
  scan->add_option("--corpus", corpus_path, "graph6 corpus file (default: built-in generator)");
  scan->add_option("--max-order", gen_max, "largest order for the built-in generator")->check(CLI::Range(1, 9));
  scan->add_option("--n-min", scan_opt.n_min, "smallest cycle length")->check(CLI::Range(3, 1000));
  scan->add_option("--n-max", scan_opt.n_max, "largest cycle length")->check(CLI::Range(3, 1000));
  scan->add_flag("--conjectures", only_conj, "run the conjecture scanners");
  scan->add_flag("--theorems", only_thm, "run the theorem checkers");
  scan->add_option("--jobs", scan_opt.jobs, "worker threads")->check(CLI::Range(1, 1024));
  scan->add_option("-o,--output", out_path, "report path (default: stdout)");
  scan->add_flag("--timing", scan_opt.timing, "include per-instance timings");
  scan->callback([&] {
    if (only_conj || only_thm) {
      scan_opt.conjectures = only_conj;
      scan_opt.theorems = only_thm;
    }
    if (corpus_path.empty()) {
      scan_opt.corpus = generate_graphs(1, gen_max, true);
      scan_opt.corpus_descriptor = "generated:connected:1.." + std::to_string(gen_max);
    } else {
      scan_opt.corpus = make_corpus(read_graph6_file(corpus_path));
      scan_opt.corpus_descriptor = "file:" + corpus_path;
    }
    const Json report = run_scan(scan_opt);
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_text(out_path, text);
      std::cout << report["summary"].dump(2) << "\n";
    }
    for (const auto& r : report["records"]) {
      for (const auto& [name, st] : r["checks"].items()) {
        if (st == "fail") rc = kAssertion;
      }
      for (const auto& [name, st] : r["conjectures"].items()) {
        if (st == "inconsistent") rc = kAssertion;
      }
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kMalformed;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const std::exception& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return kAssertion;
  }
  return rc;
}
