#include "pairstab/stability.hpp"

#include <algorithm>
#include <numeric>

#include "pairstab/errors.hpp"
#include "pairstab/search.hpp"

namespace pairstab {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw BoundExceeded("group order overflows 64 bits");
  return r;
}

std::string pair_text(std::pair<Vertex, Vertex> p) {
  return "N(" + std::to_string(p.first) + ") = N(" + std::to_string(p.second) + ")";
}

// Number of ways to choose k of n, saturating at `cap + 1`.
std::uint64_t choose_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

void require_connected(const Graph& g, const char* what) {
  if (g.empty() || !is_connected(g)) throw InvalidInput(std::string(what) + " requires a connected graph");
}

}  // namespace

Graph gamma_star(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.degree(u) != g.degree(v)) continue;
      if (g.degree(u) == 2 * static_cast<int>(common_neighbors(g, u, v).size())) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(g.order(), edges);
}

LengthSet length_set_in(const Graph& star, Vertex u, int max_len) {
  star.check_vertex(u);
  LengthSet out;
  const int deg = star.degree(u);
  if (deg == 0) {
    out.lengths = {0};
    return out;
  }
  if (deg == 1) {
    out.lengths = {0, 1};
    return out;
  }
  const auto dist = bfs_distances(star, u);
  const int component = static_cast<int>(std::count_if(dist.begin(), dist.end(), [](int d) { return d >= 0; }));
  const int limit = max_len < 0 ? component : std::min(max_len, component);
  out.truncated = limit < component;

  std::vector<Vertex> path{u};
  std::vector<char> on_path(static_cast<std::size_t>(star.order()), 0);
  on_path[u] = 1;
  const int wanted = std::max(0, limit - 2);  // lengths 3..limit
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(out.lengths.size()) == wanted) return;
    const Vertex x = path.back();
    const int len = static_cast<int>(path.size());
    for (Vertex y : star.neighbors(x)) {
      if (y == u && len >= 3 && !out.lengths.contains(len)) {
        out.lengths.insert(len);
        out.cycles[len] = path;
      } else if (!on_path[y] && len < limit) {
        // Only worth extending if y can still get back to u within the limit.
        if (len + dist[y] > limit) continue;
        on_path[y] = 1;
        path.push_back(y);
        self(self);
        path.pop_back();
        on_path[y] = 0;
      }
    }
  };
  dfs(dfs);
  return out;
}

LengthSet length_set(const Graph& g, Vertex u, int max_len) {
  return length_set_in(gamma_star(g), u, max_len);
}

bool CompatibilityProfile::truncated() const {
  return std::any_of(lengths.begin(), lengths.end(), [](const LengthSet& l) { return l.truncated; });
}

CompatibilityProfile compatibility_profile(const Graph& g, int max_len) {
  CompatibilityProfile p;
  p.gamma_star = gamma_star(g);
  p.search_bound = max_len < 0 ? g.order() : max_len;
  for (Vertex u = 0; u < g.order(); ++u) p.lengths.push_back(length_set_in(p.gamma_star, u, max_len));
  return p;
}

Compatibility is_compatible(const CompatibilityProfile& profile, int n) {
  if (n < 3) throw InvalidInput("compatibility is defined for n >= 3");
  const int target = n % 2 == 1 ? n : n / 2;
  bool uncertain = false;
  for (std::size_t u = 0; u < profile.lengths.size(); ++u) {
    const LengthSet& l = profile.lengths[u];
    if (l.lengths.contains(target)) continue;
    if (l.truncated && target > profile.search_bound) {
      uncertain = true;
      continue;
    }
    return {true, static_cast<Vertex>(u)};
  }
  if (uncertain) throw BoundExceeded("compatibility depends on a truncated cycle-length search");
  return {false, std::nullopt};
}

Compatibility is_compatible(const Graph& g, int n) { return is_compatible(compatibility_profile(g), n); }

std::optional<Edge> independent_common_neighbourhood_edge(const Graph& g) {
  for (auto [u, v] : gamma_star(g).edges()) {
    const auto common = common_neighbors(g, u, v);
    if (is_independent_set(g, common)) return Edge{u, v};
  }
  return std::nullopt;
}

bool common_neighbourhoods_not_independent(const Graph& g) {
  return !independent_common_neighbourhood_edge(g).has_value();
}

std::optional<Graph> find_cofactor(const Graph& g, const Graph& h, std::uint64_t max_candidates) {
  if (g.empty() || h.empty() || g.order() % h.order() != 0) return std::nullopt;
  const int k = g.order() / h.order();
  if (h.edge_count() == 0) {
    if (g.edge_count() != 0) return std::nullopt;
    return Graph(k);
  }
  if (g.edge_count() % (2 * h.edge_count()) != 0) return std::nullopt;
  const std::size_t e = g.edge_count() / (2 * h.edge_count());
  std::vector<Edge> slots;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) slots.emplace_back(a, b);
  }
  if (e > slots.size()) return std::nullopt;
  if (choose_capped(slots.size(), e, max_candidates) > max_candidates) {
    throw BoundExceeded("co-factor search on " + std::to_string(k) + " vertices exceeds " +
                        std::to_string(max_candidates) + " candidates");
  }
  std::vector<std::size_t> pick(e);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<Edge> edges;
    for (std::size_t i : pick) edges.push_back(slots[i]);
    Graph candidate(k, edges);
    if (are_isomorphic(g, direct_product(candidate, h).graph)) return candidate;
    // Next combination in lexicographic order.
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(e) - 1;
    while (i >= 0 && pick[i] == slots.size() - e + static_cast<std::size_t>(i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < e; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

std::optional<Graph> k2_factor_brute_force(const Graph& g) { return find_cofactor(g, complete(2)); }

std::optional<K2Factor> has_k2_factor(const Graph& g, std::uint64_t bound) {
  require_connected(g, "K2 factor search");
  std::optional<K2Factor> found;
  const Bipartition bp = bipartition(g);
  if (g.order() % 2 == 0 && bp.bipartite()) {
    std::vector<int> side(static_cast<std::size_t>(g.order()));
    for (Vertex v : (*bp.sides)[1]) side[v] = 1;
    for (const Permutation& s : enumerate_elements(automorphism_group(g), bound)) {
      bool ok = !s.is_identity() && compose(s, s).is_identity();
      for (Vertex u = 0; u < g.order() && ok; ++u) {
        ok = s.at(u) != u && side[s.at(u)] != side[u] && !g.adjacent(u, s.at(u));
      }
      if (!ok) continue;
      const std::vector<Permutation> gens{s};
      Quotient q = quotient_by_group(g, gens);
      auto iso = are_isomorphic(g, direct_product(q.graph, complete(2)).graph);
      if (!iso) throw std::logic_error("K2 factor quotient does not reproduce the graph");
      found = K2Factor{q.graph, s, *iso};
      break;
    }
  }
  if (!found && g.order() <= 8 && k2_factor_brute_force(g)) {
    throw std::logic_error("K2 factor missed by the involution search");
  }
  return found;
}

Coprimality is_coprime_with_cycle(const Graph& g, int n) {
  if (n < 3) throw InvalidInput("cycle length must be at least 3");
  require_connected(g, "coprimality test");
  Coprimality c;
  if (n % 2 == 1 || n % 4 == 0) return c;  // C_n is prime
  if (auto f = has_k2_factor(g)) {
    c.coprime = false;
    c.common_factor = "K2";
    c.cofactor = f->factor;
    return c;
  }
  if (auto f = find_cofactor(g, cycle(n / 2))) {
    c.coprime = false;
    c.common_factor = "C" + std::to_string(n / 2);
    c.cofactor = *f;
  }
  return c;
}

std::optional<int> cycle_length(const Graph& s) {
  if (s.order() < 3 || !is_connected(s)) return std::nullopt;
  for (Vertex v = 0; v < s.order(); ++v) {
    if (s.degree(v) != 2) return std::nullopt;
  }
  return s.order();
}

bool is_k2(const Graph& s) { return s.order() == 2 && s.edge_count() == 1; }

bool preserves_layers(const ProductGraph& p, const Permutation& sigma) {
  for (Vertex i = 0; i < p.right_order; ++i) {
    const Vertex target = p.layer(sigma.at(p.encode(0, i)));
    for (Vertex u = 1; u < p.left_order; ++u) {
      if (p.layer(sigma.at(p.encode(u, i))) != target) return false;
    }
  }
  return true;
}

bool is_product_form(const ProductGraph& p, const Graph& g, const Graph& h, const Permutation& sigma) {
  std::vector<Vertex> a(static_cast<std::size_t>(p.left_order));
  std::vector<Vertex> d(static_cast<std::size_t>(p.right_order));
  for (Vertex u = 0; u < p.left_order; ++u) a[u] = p.base(sigma.at(p.encode(u, 0)));
  for (Vertex x = 0; x < p.right_order; ++x) d[x] = p.layer(sigma.at(p.encode(0, x)));
  for (Vertex u = 0; u < p.left_order; ++u) {
    for (Vertex x = 0; x < p.right_order; ++x) {
      if (sigma.at(p.encode(u, x)) != p.encode(a[u], d[x])) return false;
    }
  }
  // Product form already makes a and d bijections.
  return is_automorphism(g, Permutation(std::move(a))) && is_automorphism(h, Permutation(std::move(d)));
}

SigmaAutomorphism layer_tuple(const ProductGraph& p, const Graph& h, const Permutation& sigma) {
  if (!preserves_layers(p, sigma)) throw InvalidInput("permutation does not preserve the layers");
  SigmaAutomorphism s{h, {}};
  for (Vertex i = 0; i < p.right_order; ++i) {
    std::vector<Vertex> a(static_cast<std::size_t>(p.left_order));
    for (Vertex u = 0; u < p.left_order; ++u) a[u] = p.base(sigma.at(p.encode(u, i)));
    s.tuple.emplace_back(std::move(a));
  }
  return s;
}

PermutationGroup layer_subgroup(const Graph& g, const Graph& s) {
  const ProductGraph p = direct_product(g, s);
  const int n0 = p.graph.order();
  // One marker vertex per layer, joined to that layer, in its own colour.
  std::vector<Edge> edges = p.graph.edges();
  for (Vertex w = 0; w < n0; ++w) edges.emplace_back(w, n0 + p.layer(w));
  const Graph augmented(n0 + s.order(), edges);
  std::vector<int> colors(static_cast<std::size_t>(augmented.order()), 0);
  std::fill(colors.begin() + n0, colors.end(), 1);
  const AutomorphismSearch res = search_automorphisms(augmented, colors);
  std::vector<Permutation> gens;
  for (const auto& x : res.group.generators()) {
    std::vector<Vertex> img(x.image().begin(), x.image().begin() + n0);
    gens.emplace_back(std::move(img));
  }
  return PermutationGroup(n0, std::move(gens), res.group.order());
}

std::vector<Permutation> layer_subgroup_by_filter(const Graph& g, const Graph& s, std::uint64_t bound) {
  const ProductGraph p = direct_product(g, s);
  std::vector<Permutation> out;
  for (auto& x : enumerate_elements(automorphism_group(p.graph), bound)) {
    if (preserves_layers(p, x)) out.push_back(std::move(x));
  }
  return out;
}

PermutationGroup expected_subgroup(const Graph& g, int n) {
  const Graph cn = cycle(n);
  const ProductGraph p = direct_product(g, cn);
  const PermutationGroup ag = automorphism_group(g);
  std::vector<Permutation> gens;
  for (const auto& a : ag.generators()) gens.push_back(lift_left(p, a));
  gens.push_back(lift_right(p, Permutation::rotation(n, 1)));
  gens.push_back(lift_right(p, Permutation::reflection(n)));
  // The two lifted groups commute and meet trivially.
  return PermutationGroup(p.graph.order(), std::move(gens), checked_mul(ag.order(), 2 * static_cast<std::uint64_t>(n)));
}

std::optional<Permutation> find_unexpected_automorphism(const Graph& g, int n, std::uint64_t bound) {
  const Graph cn = cycle(n);
  const ProductGraph p = direct_product(g, cn);
  const PermutationGroup P = layer_subgroup(g, cn);
  const std::uint64_t r_order = checked_mul(automorphism_group(g).order(), 2 * static_cast<std::uint64_t>(n));
  if (P.order() == r_order) return std::nullopt;
  std::optional<Permutation> found;
  try {
    for (auto& x : enumerate_elements(P, bound)) {
      if (!is_product_form(p, g, cn, x)) {
        found = std::move(x);
        break;
      }
    }
  } catch (const BoundExceeded&) {
    for (const auto& x : P.generators()) {
      if (!is_product_form(p, g, cn, x)) {
        found = x;
        break;
      }
    }
  }
  if (!found || !is_automorphism(p.graph, *found) || !preserves_layers(p, *found) ||
      is_product_form(p, g, cn, *found)) {
    throw std::logic_error("P is larger than R but no unexpected automorphism was confirmed");
  }
  return found;
}

std::optional<Permutation> find_outside_layer_automorphism(const Graph& g, const Graph& s) {
  const ProductGraph p = direct_product(g, s);
  for (const auto& x : automorphism_group(p.graph).generators()) {
    if (!preserves_layers(p, x)) return x;
  }
  return std::nullopt;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::stable: return "stable";
    case VerdictKind::trivially_unstable: return "trivially-unstable";
    case VerdictKind::nontrivially_unstable: return "nontrivially-unstable";
    case VerdictKind::unstable_unclassified: return "unstable-unclassified";
  }
  return "?";
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::outside_layer_partition: return "outside-layer-partition";
    case WitnessKind::unexpected_automorphism: return "unexpected-automorphism";
  }
  return "?";
}

std::uint64_t product_automorphism_order(const Graph& g, const Graph& s) {
  return automorphism_group(direct_product(g, s).graph).order();
}

bool is_stable_pair(const Graph& g, const Graph& s) {
  return product_automorphism_order(g, s) ==
         checked_mul(automorphism_group(g).order(), automorphism_group(s).order());
}

StabilityVerdict pair_stability(const Graph& g, const Graph& s) {
  if (g.empty() || s.empty()) throw InvalidInput("stability of a pair with an empty graph");
  const ProductGraph p = direct_product(g, s);
  const PermutationGroup aut = automorphism_group(p.graph);
  StabilityVerdict v;
  v.aut_g = automorphism_group(g).order();
  v.aut_s = automorphism_group(s).order();
  v.aut_product = aut.order();
  if (v.aut_product == checked_mul(v.aut_g, v.aut_s)) return v;

  v.reasons.push_back({"order-mismatch", "|Aut(G x S)| = " + std::to_string(v.aut_product) +
                                             ", |Aut(G)||Aut(S)| = " + std::to_string(v.aut_g * v.aut_s)});
  // Some generator lies outside the product group, or the orders would agree.
  for (const auto& x : aut.generators()) {
    if (is_product_form(p, g, s, x)) continue;
    StabilityWitness w{WitnessKind::outside_layer_partition, x, std::nullopt};
    if (preserves_layers(p, x)) {
      w.kind = WitnessKind::unexpected_automorphism;
      // With no edges in g the layer map need not be an automorphism of s,
      // and the tuple carries no information.
      if (g.edge_count() > 0) {
        w.tuple = layer_tuple(p, s, x);
        if (!is_sigma_automorphism(g, *w.tuple) || !is_nondiagonal(*w.tuple)) {
          throw std::logic_error("layer tuple of an unexpected automorphism is not a nondiagonal Sigma-automorphism");
        }
      }
    }
    v.witness = std::move(w);
    break;
  }
  if (!v.witness) throw std::logic_error("order mismatch without a generator outside the product group");

  bool trivial = false;
  if (auto w = r_thick_witness(g)) {
    v.reasons.push_back({"not-r-thin", "G: " + pair_text(*w)});
    trivial = true;
  }
  if (auto w = r_thick_witness(s)) {
    v.reasons.push_back({"not-r-thin", "S: " + pair_text(*w)});
    trivial = true;
  }
  const bool g_conn = is_connected(g);
  const bool s_conn = is_connected(s);
  if (!g_conn) v.reasons.push_back({"disconnected", "G"});
  if (!s_conn) v.reasons.push_back({"disconnected", "S"});
  trivial = trivial || !g_conn || !s_conn;
  if (is_bipartite(g) && is_bipartite(s)) {
    v.reasons.push_back({"both-bipartite", ""});
    trivial = true;
  }
  bool undecided = false;
  if (g_conn && s_conn) {
    try {
      if (is_k2(s)) {
        if (auto f = has_k2_factor(g)) {
          v.reasons.push_back({"not-coprime", "common factor K2"});
          trivial = true;
        }
      } else if (auto n = cycle_length(s)) {
        Coprimality c = is_coprime_with_cycle(g, *n);
        if (!c.coprime) {
          v.reasons.push_back({"not-coprime", "common factor " + c.common_factor});
          trivial = true;
        }
      } else {
        undecided = true;
        v.reasons.push_back({"coprimality-undecided", "S is neither K2 nor a cycle"});
      }
    } catch (const BoundExceeded& e) {
      undecided = true;
      v.reasons.push_back({"coprimality-undecided", e.what()});
    }
  }
  if (trivial) {
    v.kind = VerdictKind::trivially_unstable;
  } else if (undecided) {
    v.kind = VerdictKind::unstable_unclassified;
  } else {
    v.kind = VerdictKind::nontrivially_unstable;
  }
  return v;
}

bool is_anti_automorphism(const Graph& g, const Permutation& gamma, const Permutation& alpha) {
  if (gamma.degree() != g.order() || alpha.degree() != g.order()) return false;
  if (gamma.is_identity() || !compose(gamma, gamma).is_identity() || !is_automorphism(g, gamma)) return false;
  if (compose(alpha, gamma) != compose(gamma, alpha)) return false;
  const Permutation ga = compose(gamma, alpha);  // v -> v^{γα}
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (!g.adjacent(alpha.at(u), ga.at(v))) return false;
    }
  }
  return true;
}

std::optional<AntiAutomorphism> find_anti_automorphism(const Graph& g, std::uint64_t bound) {
  for (const auto& t : two_fold_group(g, bound)) {
    const Permutation gamma = compose(t.second, inverse(t.first));
    if (is_anti_automorphism(g, gamma, t.first)) return AntiAutomorphism{gamma, t.first};
  }
  return std::nullopt;
}

bool is_cross_cover_witness(const Graph& g, const Permutation& phi) {
  if (phi.degree() != g.order() || order_of(phi) < 3 || !is_automorphism(g, phi)) return false;
  const Permutation inv = inverse(phi);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (!g.adjacent(phi.at(u), inv.at(v))) return false;
    }
  }
  return true;
}

std::optional<Permutation> find_cross_cover_witness(const Graph& g, std::uint64_t bound) {
  for (const auto& phi : enumerate_elements(automorphism_group(g), bound)) {
    if (is_cross_cover_witness(g, phi)) return phi;
  }
  return std::nullopt;
}

InstabilityMechanisms instability_mechanisms(const Graph& g, std::uint64_t bound) {
  if (g.empty() || !is_r_thin(g) || !is_connected(g) || is_bipartite(g)) {
    throw InvalidInput("mechanism report requires an R-thin connected non-bipartite graph");
  }
  InstabilityMechanisms m;
  m.unstable = !is_stable_pair(g, complete(2));
  for (const auto& t : two_fold_group(g, bound)) {
    if (t.first != t.second) {
      m.nondiagonal_two_fold = true;
      break;
    }
  }
  m.anti_automorphism = find_anti_automorphism(g, bound).has_value();
  m.cross_cover = find_cross_cover_witness(g, bound).has_value();
  m.consistent = m.unstable == m.nondiagonal_two_fold && (!m.anti_automorphism || m.unstable) &&
                 (!m.cross_cover || m.unstable);
  return m;
}

FibreActionResult fibre_action_check(const Graph& g, int n, std::uint64_t bound) {
  FibreActionResult res;
  if (n < 3 || n == 4 || g.empty() || !is_r_thin(g) || !is_connected(g)) return res;
  res.applicable = true;
  res.non_bipartite_case = !is_bipartite(g) || n % 2 == 1;
  const Graph cn = cycle(n);
  const ProductGraph p = direct_product(g, cn);
  const int V = g.order();
  auto mod = [n](int x) { return ((x % n) + n) % n; };

  // Pairs joined by an even walk are those in one component of the double cover's layer 0.
  const ProductGraph d = double_cover(g);
  const auto comps = connected_components(d.graph);
  std::vector<int> comp_of(static_cast<std::size_t>(d.graph.order()));
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex w : comps[c]) comp_of[w] = static_cast<int>(c);
  }

  const PermutationGroup aut = automorphism_group(p.graph);
  const std::vector<Permutation> elements = enumerate_elements(aut, bound);
  res.elements_checked = elements.size();
  // always_split[u*n+i]: (u,i) and (u,i+2) land in different layers under every σ.
  std::vector<char> always_split(static_cast<std::size_t>(V * n), 1);
  auto fail = [&](const std::string& part, const Permutation& s, const std::string& where) {
    if (res.violations.size() < 20) res.violations.push_back(part + " fails for " + s.to_string() + " at " + where);
  };

  for (const Permutation& s : elements) {
    auto f1 = [&](Vertex u, int i) { return p.base(s.at(p.encode(u, mod(i)))); };
    auto f2 = [&](Vertex u, int i) { return p.layer(s.at(p.encode(u, mod(i)))); };
    bool every_vertex_split = true;
    for (Vertex u = 0; u < V; ++u) {
      bool u_split = false;
      for (int i = 0; i < n; ++i) {
        for (int sgn : {1, -1}) {
          const int j = i + 2 * sgn;
          const std::string where = "u=" + std::to_string(u) + " i=" + std::to_string(i) + " j=" + std::to_string(mod(j));
          if (f2(u, i) != f2(u, j)) {
            u_split = true;
            if (f1(u, i) != f1(u, j)) fail("(a)", s, where);
            if (res.non_bipartite_case) {
              for (int k = 0; k < n; ++k) {
                for (int l = k + 1; l < n; ++l) {
                  if (f2(u, k) == f2(u, l)) fail("(c)", s, where);
                }
              }
              for (Vertex w = 0; w < V; ++w) {
                if (f2(w, i) == f2(w, j)) fail("(d)", s, where);
              }
            }
          } else {
            if (sgn == 1) always_split[u * n + i] = 0;
            for (int r = 1; 2 * r <= n - 2; ++r) {
              if (f2(u, i) != f2(u, i + 2 * r * sgn)) fail("(b)", s, where);
            }
          }
        }
      }
      every_vertex_split = every_vertex_split && u_split;
    }
    if (res.non_bipartite_case && every_vertex_split) {
      for (Vertex v = 0; v < V; ++v) {
        for (Vertex w = v + 1; w < V; ++w) {
          if (comp_of[d.encode(v, 0)] != comp_of[d.encode(w, 0)]) continue;
          for (int k = 0; k < n; ++k) {
            if (f2(v, k) != f2(w, k)) fail("(e)", s, "v=" + std::to_string(v) + " w=" + std::to_string(w));
          }
        }
      }
    }
  }
  if (res.non_bipartite_case && std::any_of(always_split.begin(), always_split.end(), [](char c) { return c; })) {
    if (aut.order() != layer_subgroup(g, cn).order()) {
      res.violations.push_back("(f) fails: a fibre pair is always split but Aut(G x C_n) != P(G, C_n)");
    }
  }
  return res;
}

}  // namespace pairstab
