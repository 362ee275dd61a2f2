#include "pairstab/sigma.hpp"

#include <algorithm>
#include <set>

#include "pairstab/constructors.hpp"
#include "pairstab/errors.hpp"
#include "pairstab/search.hpp"

namespace pairstab {

namespace {

void check_degree(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) {
    throw InvalidInput("permutation degree " + std::to_string(p.degree()) +
                       " does not match graph order " + std::to_string(g.order()));
  }
}

void check_bound(std::size_t count, std::uint64_t bound, const char* what) {
  if (count > bound) {
    throw BoundExceeded(std::string("more than ") + std::to_string(bound) + " " + what);
  }
}

}  // namespace

bool is_two_fold(const Graph& g, const Permutation& a, const Permutation& b) {
  check_degree(g, a);
  check_degree(g, b);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(a.at(u), b.at(v))) return false;
    }
  }
  return true;
}

std::vector<TwoFoldAutomorphism> two_fold_group(const Graph& g, std::uint64_t bound) {
  if (g.empty()) return {TwoFoldAutomorphism{Permutation::identity(0), Permutation::identity(0)}};
  const ProductGraph d = double_cover(g);
  std::vector<int> layer(static_cast<std::size_t>(d.graph.order()));
  for (Vertex w = 0; w < d.graph.order(); ++w) layer[w] = d.layer(w);
  const PermutationGroup grp = automorphism_group(d.graph, layer);
  std::vector<TwoFoldAutomorphism> out;
  for (const Permutation& s : enumerate_elements(grp, bound)) {
    std::vector<Vertex> a(static_cast<std::size_t>(g.order()));
    std::vector<Vertex> b(static_cast<std::size_t>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u) {
      a[u] = d.base(s.at(d.encode(u, 0)));
      b[u] = d.base(s.at(d.encode(u, 1)));
    }
    out.push_back({Permutation(std::move(a)), Permutation(std::move(b))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TwoFoldAutomorphism> two_fold_group_direct(const Graph& g, std::uint64_t bound) {
  const int n = g.order();
  std::vector<Vertex> a(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> b(static_cast<std::size_t>(n), -1);
  std::vector<char> used_a(static_cast<std::size_t>(n), 0);
  std::vector<char> used_b(static_cast<std::size_t>(n), 0);
  std::vector<TwoFoldAutomorphism> out;

  // Assignment order a(0), b(0), a(1), b(1), ...
  auto recurse = [&](auto&& self, int step) -> void {
    if (step == 2 * n) {
      out.push_back({Permutation(a), Permutation(b)});
      check_bound(out.size(), bound, "two-fold automorphisms");
      return;
    }
    const Vertex u = step / 2;
    const bool first = step % 2 == 0;
    for (Vertex x = 0; x < n; ++x) {
      if ((first ? used_a : used_b)[x] || g.degree(x) != g.degree(u)) continue;
      bool ok = true;
      for (Vertex v = 0; v < n && ok; ++v) {
        if (first && b[v] >= 0) ok = g.adjacent(u, v) == g.adjacent(x, b[v]);
        if (!first && a[v] >= 0) ok = g.adjacent(v, u) == g.adjacent(a[v], x);
      }
      if (!ok) continue;
      (first ? a : b)[u] = x;
      (first ? used_a : used_b)[x] = 1;
      self(self, step + 1);
      (first ? used_a : used_b)[x] = 0;
      (first ? a : b)[u] = -1;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_sigma_automorphism(const Graph& g, const SigmaAutomorphism& s) {
  if (static_cast<int>(s.tuple.size()) != s.sigma.order()) {
    throw InvalidInput("tuple length " + std::to_string(s.tuple.size()) +
                       " does not match the order of Sigma " + std::to_string(s.sigma.order()));
  }
  for (const auto& p : s.tuple) check_degree(g, p);
  for (auto [i, j] : s.sigma.edges()) {
    if (!is_two_fold(g, s.tuple[i], s.tuple[j])) return false;
  }
  return true;
}

bool is_nondiagonal(const SigmaAutomorphism& s) {
  for (const auto& p : s.tuple) {
    if (p != s.tuple.front()) return true;
  }
  return false;
}

int TfDigraph::index_of(const Permutation& p) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
  if (it == nodes.end() || *it != p) return -1;
  return static_cast<int>(it - nodes.begin());
}

bool TfDigraph::has_arc(int i, int j) const {
  return std::binary_search(out[i].begin(), out[i].end(), j);
}

std::size_t TfDigraph::arc_count() const {
  std::size_t n = 0;
  for (const auto& o : out) n += o.size();
  return n;
}

TfDigraph tf_digraph(const Graph& g, std::uint64_t bound) {
  const auto pairs = two_fold_group(g, bound);
  TfDigraph d;
  std::set<Permutation> nodes;
  for (const auto& t : pairs) {
    nodes.insert(t.first);
    nodes.insert(t.second);
  }
  d.nodes.assign(nodes.begin(), nodes.end());
  d.out.assign(d.nodes.size(), {});
  d.loop.assign(d.nodes.size(), 0);
  for (const auto& t : pairs) {
    const int i = d.index_of(t.first);
    const int j = d.index_of(t.second);
    d.out[i].push_back(j);
    if (i == j) d.loop[i] = 1;
  }
  for (auto& o : d.out) std::sort(o.begin(), o.end());
  for (std::size_t i = 0; i < d.out.size(); ++i) {
    for (int j : d.out[i]) {
      if (!d.has_arc(j, static_cast<int>(i))) {
        throw std::logic_error("two-fold relation is not symmetric");
      }
    }
  }
  return d;
}

std::vector<SigmaAutomorphism> cycle_automorphisms(const TfDigraph& d, int n, std::uint64_t bound) {
  if (n < 3) throw InvalidInput("cycle length must be at least 3");
  const Graph cn = cycle(n);
  std::vector<SigmaAutomorphism> out;
  std::vector<int> walk;
  auto extend = [&](auto&& self, int last) -> void {
    if (static_cast<int>(walk.size()) == n) {
      if (!d.has_arc(last, walk.front())) return;
      SigmaAutomorphism s{cn, {}};
      for (int i : walk) s.tuple.push_back(d.nodes[i]);
      out.push_back(std::move(s));
      check_bound(out.size(), bound, "cycle automorphisms");
      return;
    }
    for (int next : d.out[last]) {
      walk.push_back(next);
      self(self, next);
      walk.pop_back();
    }
  };
  for (int s = 0; s < static_cast<int>(d.nodes.size()); ++s) {
    walk.assign(1, s);
    extend(extend, s);
  }
  return out;
}

std::vector<SigmaAutomorphism> cycle_automorphisms(const Graph& g, int n, std::uint64_t bound) {
  if (n < 3) throw InvalidInput("cycle length must be at least 3");
  return cycle_automorphisms(tf_digraph(g, bound), n, bound);
}

std::uint64_t count_cycle_automorphisms(const TfDigraph& d, int n) {
  if (n < 3) throw InvalidInput("cycle length must be at least 3");
  const std::size_t m = d.nodes.size();
  std::uint64_t total = 0;
  std::vector<std::uint64_t> cur(m);
  std::vector<std::uint64_t> next(m);
  for (std::size_t s = 0; s < m; ++s) {
    std::fill(cur.begin(), cur.end(), 0);
    cur[s] = 1;
    for (int step = 0; step < n; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t i = 0; i < m; ++i) {
        if (!cur[i]) continue;
        for (int j : d.out[i]) {
          if (__builtin_add_overflow(next[j], cur[i], &next[j])) {
            throw BoundExceeded("closed walk count overflows 64 bits");
          }
        }
      }
      std::swap(cur, next);
    }
    if (__builtin_add_overflow(total, cur[s], &total)) {
      throw BoundExceeded("closed walk count overflows 64 bits");
    }
  }
  return total;
}

std::vector<SigmaAutomorphism> sigma_automorphisms_brute_force(const Graph& g, const Graph& sigma,
                                                               std::uint64_t bound) {
  const int n = g.order();
  const int m = sigma.order();
  std::vector<std::vector<Vertex>> alpha(static_cast<std::size_t>(m),
                                         std::vector<Vertex>(static_cast<std::size_t>(n), -1));
  std::vector<std::vector<char>> used(static_cast<std::size_t>(m),
                                      std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<SigmaAutomorphism> out;

  auto recurse = [&](auto&& self, int step) -> void {
    if (step == n * m) {
      SigmaAutomorphism s{sigma, {}};
      for (const auto& a : alpha) s.tuple.emplace_back(a);
      out.push_back(std::move(s));
      check_bound(out.size(), bound, "Sigma-automorphisms");
      return;
    }
    const int i = step / n;
    const Vertex u = step % n;
    const auto& nbrs = sigma.neighbors(i);
    for (Vertex x = 0; x < n; ++x) {
      if (used[i][x]) continue;
      if (!nbrs.empty() && g.degree(x) != g.degree(u)) continue;
      bool ok = true;
      for (Vertex j : nbrs) {
        for (Vertex v = 0; v < n && ok; ++v) {
          if (alpha[j][v] >= 0) ok = g.adjacent(u, v) == g.adjacent(x, alpha[j][v]);
        }
        if (!ok) break;
      }
      if (!ok) continue;
      alpha[i][u] = x;
      used[i][x] = 1;
      self(self, step + 1);
      used[i][x] = 0;
      alpha[i][u] = -1;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tuple < b.tuple; });
  return out;
}

std::optional<SigmaAutomorphism> find_nondiagonal_cycle_automorphism(const TfDigraph& d, int n) {
  if (n < 3) throw InvalidInput("cycle length must be at least 3");
  const int m = static_cast<int>(d.nodes.size());
  // can[k][v * 2 + f]: from node v at position k, with flag f so far, the walk
  // can be completed back to the start with the flag set at the end.
  std::vector<std::vector<char>> can(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(2 * m), 0));
  for (int s = 0; s < m; ++s) {
    for (int v = 0; v < m; ++v) {
      for (int f = 0; f < 2; ++f) {
        can[n - 1][2 * v + f] = d.has_arc(v, s) && (f || v != s);
      }
    }
    for (int k = n - 2; k >= 0; --k) {
      for (int v = 0; v < m; ++v) {
        for (int f = 0; f < 2; ++f) {
          char ok = 0;
          for (int w : d.out[v]) {
            if (can[k + 1][2 * w + (f || w != v ? 1 : 0)]) {
              ok = 1;
              break;
            }
          }
          can[k][2 * v + f] = ok;
        }
      }
    }
    if (!can[0][2 * s]) continue;
    // Greedy reconstruction: least successor that keeps completion possible.
    std::vector<int> walk{s};
    int f = 0;
    for (int k = 0; k + 1 < n; ++k) {
      const int v = walk.back();
      for (int w : d.out[v]) {
        const int nf = (f || w != v) ? 1 : 0;
        if (can[k + 1][2 * w + nf]) {
          walk.push_back(w);
          f = nf;
          break;
        }
      }
    }
    SigmaAutomorphism out{cycle(n), {}};
    for (int i : walk) out.tuple.push_back(d.nodes[i]);
    return out;
  }
  return std::nullopt;
}

std::optional<SigmaAutomorphism> find_nondiagonal_cycle_automorphism(const Graph& g, int n,
                                                                     std::uint64_t bound) {
  if (n < 3) throw InvalidInput("cycle length must be at least 3");
  auto found = find_nondiagonal_cycle_automorphism(tf_digraph(g, bound), n);
  if (found && (!is_sigma_automorphism(g, *found) || !is_nondiagonal(*found))) {
    throw std::logic_error("reconstructed walk is not a nondiagonal cycle automorphism");
  }
  return found;
}

SigmaAutomorphism lift_twofold_to_even_cycle(const Graph& g, const TwoFoldAutomorphism& a, int k) {
  if (k < 2) throw InvalidInput("interleaving needs k >= 2");
  if (!is_two_fold(g, a.first, a.second)) throw InvalidInput("input pair is not a two-fold automorphism");
  SigmaAutomorphism s{cycle(2 * k), {}};
  for (int i = 0; i < k; ++i) {
    s.tuple.push_back(a.first);
    s.tuple.push_back(a.second);
  }
  return s;
}

SigmaAutomorphism act_on_sigma_automorphism(const SigmaAutomorphism& s, const Permutation& phi) {
  if (phi.degree() != s.sigma.order() || !is_automorphism(s.sigma, phi)) {
    throw InvalidInput("phi is not an automorphism of Sigma");
  }
  SigmaAutomorphism out{s.sigma, {}};
  for (int i = 0; i < s.sigma.order(); ++i) out.tuple.push_back(s.tuple.at(phi.at(i)));
  return out;
}

SigmaAutomorphism restrict_sigma_automorphism(const SigmaAutomorphism& s,
                                              std::span<const Vertex> vertices) {
  if (vertices.empty()) throw InvalidInput("restriction to an empty vertex set");
  InducedSubgraph sub = induced_subgraph(s.sigma, vertices);
  SigmaAutomorphism out{sub.graph, {}};
  for (Vertex i : sub.original) out.tuple.push_back(s.tuple.at(i));
  return out;
}

int entries_in_aut(const Graph& g, const SigmaAutomorphism& s) {
  int count = 0;
  for (const auto& p : s.tuple) count += is_automorphism(g, p) ? 1 : 0;
  return count;
}

std::vector<std::string> r_thin_constraint_violations(const Graph& g, const SigmaAutomorphism& s) {
  std::vector<std::string> out;
  if (entries_in_aut(g, s) != 0) out.push_back("an entry is an automorphism");
  for (const auto& p : s.tuple) {
    if (order_of(p) != order_of(s.tuple.front())) {
      out.push_back("entries have different orders");
      break;
    }
  }
  for (auto [i, j] : s.sigma.edges()) {
    if (s.tuple[i] == s.tuple[j]) {
      out.push_back("entries agree across the edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
      break;
    }
  }
  return out;
}

SigmaAutomorphism multiply(const SigmaAutomorphism& a, const SigmaAutomorphism& b) {
  if (!(a.sigma == b.sigma) || a.tuple.size() != b.tuple.size()) {
    throw InvalidInput("Sigma-automorphisms over different Sigma");
  }
  SigmaAutomorphism out{a.sigma, {}};
  for (std::size_t i = 0; i < a.tuple.size(); ++i) out.tuple.push_back(compose(a.tuple[i], b.tuple[i]));
  return out;
}

SigmaAutomorphism inverse(const SigmaAutomorphism& a) {
  SigmaAutomorphism out{a.sigma, {}};
  for (const auto& p : a.tuple) out.tuple.push_back(inverse(p));
  return out;
}

}  // namespace pairstab
