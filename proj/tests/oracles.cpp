#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pairstab/graph.hpp"

namespace oracle {

using pairstab::Edge;
using pairstab::Vertex;

std::vector<Graph> labelled_graphs(int n) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (mask >> k & 1) edges.push_back(slots[k]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

std::vector<Permutation> automorphisms(const Graph& g) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  const auto edges = g.edges();
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (auto [u, v] : edges) {
      if (!g.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    }
    if (ok) out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

std::uint64_t code(const Graph& g, const std::vector<Vertex>& p) {
  std::uint64_t c = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) c = c << 1 | (g.adjacent(p[a], p[b]) ? 1 : 0);
  }
  return c;
}

bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!seen[v] && g.adjacent(u, v)) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == g.order();
}

}  // namespace

std::size_t class_count(int n, bool connected_only) {
  std::set<std::uint64_t> classes;
  std::vector<Vertex> base(n);
  std::iota(base.begin(), base.end(), 0);
  for (const auto& g : labelled_graphs(n)) {
    if (connected_only && !connected(g)) continue;
    std::uint64_t best = ~std::uint64_t{0};
    auto p = base;
    do {
      best = std::min(best, code(g, p));
    } while (std::next_permutation(p.begin(), p.end()));
    classes.insert(best);
  }
  return classes.size();
}

std::uint64_t known_graph_count(int n, bool connected_only) {
  static const std::uint64_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
  static const std::uint64_t conn[] = {1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080};
  return connected_only ? conn[n] : all[n];
}

std::vector<pairstab::TwoFoldAutomorphism> two_fold_pairs(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<Permutation> perms;
  auto p = base;
  do {
    perms.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<pairstab::TwoFoldAutomorphism> out;
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      bool ok = true;
      for (Vertex u = 0; u < n && ok; ++u) {
        for (Vertex v = 0; v < n && ok; ++v) {
          ok = g.adjacent(u, v) == g.adjacent(a.at(u), b.at(v));
        }
      }
      if (ok) out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_cycle_tuples(const Graph& g, int n) {
  const auto pairs = two_fold_pairs(g);
  std::map<Permutation, std::size_t> index;
  for (const auto& t : pairs) {
    index.emplace(t.first, index.size());
  }
  const std::size_t k = index.size();
  std::vector<std::vector<std::uint64_t>> adj(k, std::vector<std::uint64_t>(k, 0));
  for (const auto& t : pairs) adj[index.at(t.first)][index.at(t.second)] = 1;
  std::uint64_t total = 0;
  for (std::size_t start = 0; start < k; ++start) {
    std::vector<std::uint64_t> walks(k, 0);
    walks[start] = 1;
    for (int step = 0; step < n; ++step) {
      std::vector<std::uint64_t> next(k, 0);
      for (std::size_t a = 0; a < k; ++a) {
        if (walks[a] == 0) continue;
        for (std::size_t b = 0; b < k; ++b) next[b] += walks[a] * adj[a][b];
      }
      walks = std::move(next);
    }
    total += walks[start];
  }
  return total;
}

Graph gamma_star(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      int common = 0;
      for (Vertex w = 0; w < g.order(); ++w) common += g.adjacent(u, w) && g.adjacent(v, w);
      if (g.degree(u) == g.degree(v) && g.degree(u) == 2 * common) edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), edges);
}

std::vector<int> cycle_lengths_through(const Graph& g, int u) {
  std::set<int> lengths;
  std::vector<char> on(g.order(), 0);
  std::vector<int> path{u};
  on[u] = 1;
  auto dfs = [&](auto&& self, int x) -> void {
    for (Vertex y = 0; y < g.order(); ++y) {
      if (!g.adjacent(x, y)) continue;
      if (y == u && path.size() >= 3) lengths.insert(static_cast<int>(path.size()));
      if (on[y]) continue;
      on[y] = 1;
      path.push_back(y);
      self(self, y);
      path.pop_back();
      on[y] = 0;
    }
  };
  dfs(dfs, u);
  return {lengths.begin(), lengths.end()};
}

std::pair<int, std::size_t> twist_shape(const pairstab::TwistSpec& spec) {
  using pairstab::H;
  const H size = H{1} << spec.dim;
  const int n = spec.base.order();
  // L(v) as explicit element sets, by closure under addition.
  std::vector<std::set<H>> L(n);
  for (int v = 0; v < n; ++v) {
    L[v] = {0};
    bool grew = true;
    while (grew) {
      grew = false;
      for (H a : std::set<H>(L[v])) {
        for (H g : spec.L[v]) grew = L[v].insert(a ^ g).second || grew;
      }
    }
  }
  using Coset = std::pair<int, std::set<H>>;
  auto coset = [&](int v, H h) {
    std::set<H> c;
    for (H l : L[v]) c.insert(h ^ l);
    return Coset{v, c};
  };
  std::set<Coset> vertices;
  for (int v = 0; v < n; ++v) {
    for (H h = 0; h < size; ++h) vertices.insert(coset(v, h));
  }
  std::set<std::pair<Coset, Coset>> arcs;
  for (const auto& [arc, xs] : spec.omega) {
    for (H h = 0; h < size; ++h) {
      for (H x : xs) arcs.insert({coset(arc.first, h), coset(arc.second, h ^ x)});
    }
  }
  return {static_cast<int>(arcs.size() / 2), vertices.size()};
}

bool graph_invariants_hold(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto& nb = g.neighbors(u);
    if (!std::is_sorted(nb.begin(), nb.end())) return false;
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
    for (Vertex v : nb) {
      if (v == u || !g.contains(v) || !g.adjacent(v, u) || !g.adjacent(u, v)) return false;
    }
    degree_sum += nb.size();
  }
  return degree_sum == 2 * g.edge_count() && g.edges().size() == g.edge_count();
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

bool table_preserves_product_edges(const Graph& g, int n, const std::vector<std::array<int, 4>>& rows) {
  // (u, i) ~ (v, j) iff u ~ v in g and j = i ± 1 mod n.
  auto adj = [&](std::pair<int, int> a, std::pair<int, int> b) {
    const int d = ((a.second - b.second) % n + n) % n;
    return g.adjacent(a.first, b.first) && (d == 1 || d == n - 1);
  };
  std::map<std::pair<int, int>, std::pair<int, int>> m;
  for (const auto& r : rows) m[{r[0] - 1, r[1]}] = {r[2] - 1, r[3]};
  if (m.size() != static_cast<std::size_t>(g.order() * n)) return false;
  std::set<std::pair<int, int>> images;
  for (const auto& [k, v] : m) images.insert(v);
  if (images.size() != m.size()) return false;
  for (const auto& [a, fa] : m) {
    for (const auto& [b, fb] : m) {
      if (adj(a, b) != adj(fa, fb)) return false;
    }
  }
  return true;
}

}  // namespace oracle
