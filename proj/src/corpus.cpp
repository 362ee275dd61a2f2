#include "pairstab/corpus.hpp"

#include <algorithm>
#include <map>

#include "pairstab/errors.hpp"
#include "pairstab/graph6.hpp"
#include "pairstab/search.hpp"

namespace pairstab {

namespace {

bool entry_less(const CorpusEntry& a, const CorpusEntry& b) {
  if (a.graph.order() != b.graph.order()) return a.graph.order() < b.graph.order();
  return a.id < b.id;
}

}  // namespace

std::string canonical_id(const Graph& g) { return emit_graph6(canonical_labeling(g).form); }

std::vector<CorpusEntry> generate_graphs(int min_order, int max_order, bool connected_only) {
  if (min_order < 1 || max_order < min_order || max_order > 9) {
    throw InvalidInput("graph generator supports orders 1..9");
  }
  std::vector<Graph> level{Graph(1)};
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= max_order; ++n) {
    if (n > 1) {
      std::map<std::string, Graph> next;
      for (const Graph& g : level) {
        const auto base = g.edges();
        for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
          std::vector<Edge> edges = base;
          for (int v = 0; v < n - 1; ++v) {
            if ((mask >> v) & 1U) edges.emplace_back(v, n - 1);
          }
          Graph h(n, edges);
          CanonicalLabeling c = canonical_labeling(h);
          next.try_emplace(emit_graph6(c.form), std::move(c.form));
        }
      }
      level.clear();
      for (auto& [id, g] : next) level.push_back(std::move(g));
    }
    if (n < min_order) continue;
    for (const Graph& g : level) {
      if (connected_only && !is_connected(g)) continue;
      out.push_back({emit_graph6(g), g});
    }
  }
  std::sort(out.begin(), out.end(), entry_less);
  return out;
}

std::vector<CorpusEntry> make_corpus(const std::vector<Graph>& graphs) {
  std::map<std::string, Graph> seen;
  for (const Graph& g : graphs) {
    CanonicalLabeling c = canonical_labeling(g);
    seen.try_emplace(emit_graph6(c.form), std::move(c.form));
  }
  std::vector<CorpusEntry> out;
  for (auto& [id, g] : seen) out.push_back({id, std::move(g)});
  std::sort(out.begin(), out.end(), entry_less);
  return out;
}

}  // namespace pairstab
