#include "pairstab/twist.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "pairstab/errors.hpp"

namespace pairstab {

namespace {

constexpr int kMaxDim = 20;

int leading_bit(H x) { return 31 - std::countl_zero(x); }

std::string arc_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::set<H> as_set(const std::vector<H>& xs) { return {xs.begin(), xs.end()}; }

}  // namespace

Subspace::Subspace(int dim, std::span<const H> generators) : dim_(dim) {
  const H mask = dim >= 32 ? ~H{0} : ((H{1} << dim) - 1);
  for (H g : generators) {
    if (g & ~mask) throw InvalidInput("element has bits beyond dimension " + std::to_string(dim));
    H x = reduce(g);
    if (x == 0) continue;
    // Clear the new pivot from existing rows to keep the basis fully reduced.
    const int p = leading_bit(x);
    for (H& b : basis_) {
      if ((b >> p) & 1U) b ^= x;
    }
    basis_.push_back(x);
    std::sort(basis_.begin(), basis_.end(), std::greater<>());
  }
}

H Subspace::reduce(H x) const {
  for (H b : basis_) {
    if ((x >> leading_bit(b)) & 1U) x ^= b;
  }
  return x;
}

std::vector<H> Subspace::elements() const {
  std::vector<H> out{0};
  for (H b : basis_) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

H BitMatrix::apply(H h) const {
  H out = 0;
  for (int i = 0; i < dim; ++i) {
    if ((h >> (dim - 1 - i)) & 1U) out ^= rows[i];
  }
  return out;
}

bool BitMatrix::invertible() const {
  return Subspace(dim, rows).rank() == dim;
}

BitMatrix BitMatrix::identity(int dim) {
  BitMatrix m;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) m.rows.push_back(H{1} << (dim - 1 - i));
  return m;
}

H tuple_to_mask(std::span<const int> bits) {
  H x = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw InvalidInput("bit tuple entries must be 0 or 1");
    x = (x << 1) | static_cast<H>(b);
  }
  return x;
}

std::vector<int> mask_to_tuple(H x, int dim) {
  std::vector<int> out(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) out[i] = static_cast<int>((x >> (dim - 1 - i)) & 1U);
  return out;
}

void validate_twist(const TwistSpec& spec) {
  const Graph& g = spec.base;
  const int dim = spec.dim;
  if (dim < 1 || dim > kMaxDim) {
    throw InvalidInput("twist dimension must be in 1.." + std::to_string(kMaxDim));
  }
  const H mask = (H{1} << dim) - 1;
  auto check_element = [&](H x, const std::string& where) {
    if (x & ~mask) throw InvalidInput(where + ": element outside Z_2^" + std::to_string(dim));
  };
  if (spec.alpha.degree() != g.order()) throw InvalidInput("alpha: degree does not match base");
  if (!is_automorphism(g, spec.alpha)) throw InvalidInput("alpha is not an automorphism of the base");
  if (spec.gamma.dim != dim || static_cast<int>(spec.gamma.rows.size()) != dim) {
    throw InvalidInput("gamma: expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                       " matrix");
  }
  for (H r : spec.gamma.rows) check_element(r, "gamma");
  if (!spec.gamma.invertible()) throw InvalidInput("gamma is not invertible over GF(2)");
  if (static_cast<int>(spec.L.size()) != g.order()) {
    throw InvalidInput("L: expected one subgroup per base vertex");
  }
  check_element(spec.h0, "h0");

  std::vector<Subspace> L;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (H x : spec.L[v]) check_element(x, "L(" + std::to_string(v) + ")");
    L.emplace_back(dim, spec.L[v]);
  }
  for (const auto& [arc, xs] : spec.omega) {
    if (!g.contains(arc.first) || !g.contains(arc.second) || !g.adjacent(arc.first, arc.second)) {
      throw InvalidInput("omega: " + arc_name(arc.first, arc.second) + " is not an arc of the base");
    }
    for (H x : xs) check_element(x, "omega" + arc_name(arc.first, arc.second));
  }
  for (auto [u, v] : g.edges()) {
    for (auto a : {std::pair{u, v}, std::pair{v, u}}) {
      if (!spec.omega.contains(a)) {
        throw InvalidInput("omega: missing arc " + arc_name(a.first, a.second));
      }
    }
  }

  // L(v^alpha) = L(v)^gamma
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<H> img;
    for (H b : L[v].basis()) img.push_back(spec.gamma.apply(b));
    if (!(Subspace(dim, img) == L[spec.alpha.at(v)])) {
      throw InvalidInput("L(v^alpha) = L(v)^gamma fails at v=" + std::to_string(v));
    }
  }
  // omega(v,u) = { x^-1 : x in omega(u,v) }; in Z_2^n every x is its own inverse.
  for (const auto& [arc, xs] : spec.omega) {
    std::set<H> inv;
    for (H x : xs) inv.insert(x);  // x^-1 = x
    if (as_set(spec.omega.at({arc.second, arc.first})) != inv) {
      throw InvalidInput("omega(v,u) = omega(u,v)^-1 fails at arc " +
                         arc_name(arc.first, arc.second));
    }
  }
  // omega((u,v)^alpha) = omega(u,v)^gamma + h0
  for (const auto& [arc, xs] : spec.omega) {
    std::set<H> img;
    for (H x : xs) img.insert(spec.gamma.apply(x) ^ spec.h0);
    const std::pair<Vertex, Vertex> moved{spec.alpha.at(arc.first), spec.alpha.at(arc.second)};
    if (as_set(spec.omega.at(moved)) != img) {
      throw InvalidInput("omega((u,v)^alpha) = omega(u,v)^gamma + h0 fails at arc " +
                         arc_name(arc.first, arc.second));
    }
  }
  // h0 not in the intersection of all L(v)
  bool in_all = true;
  for (const auto& s : L) in_all = in_all && s.contains(spec.h0);
  if (in_all) throw InvalidInput("h0 lies in the intersection of all L(v)");
}

TwistGraph twist_construct(const TwistSpec& spec) {
  validate_twist(spec);
  const Graph& g = spec.base;
  const H size = H{1} << spec.dim;
  std::vector<Subspace> L;
  for (Vertex v = 0; v < g.order(); ++v) L.emplace_back(spec.dim, spec.L[v]);

  TwistGraph t;
  std::map<std::pair<Vertex, H>, Vertex> index;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::set<H> reps;
    for (H h = 0; h < size; ++h) reps.insert(L[v].reduce(h));
    for (H r : reps) {
      index[{v, r}] = static_cast<Vertex>(t.decode.size());
      t.decode.emplace_back(v, r);
    }
  }
  std::set<std::pair<Vertex, Vertex>> arcs;
  for (const auto& [arc, xs] : spec.omega) {
    auto [u, v] = arc;
    for (H h = 0; h < size; ++h) {
      const Vertex a = index.at({u, L[u].reduce(h)});
      for (H x : xs) {
        const Vertex b = index.at({v, L[v].reduce(h ^ x)});
        if (a == b) throw InvalidInput("twist produces a loop at arc " + arc_name(u, v));
        arcs.emplace(a, b);
      }
    }
  }
  std::vector<Edge> edges;
  for (auto [a, b] : arcs) {
    if (!arcs.contains({b, a})) {
      throw InvalidInput("twist arc set is not symmetric at " + arc_name(a, b));
    }
    if (a < b) edges.emplace_back(a, b);
  }
  t.graph = Graph(static_cast<int>(t.decode.size()), edges);
  return t;
}

std::pair<Permutation, Permutation> twist_two_fold(const TwistSpec& spec, const TwistGraph& t) {
  std::vector<Subspace> L;
  for (Vertex v = 0; v < spec.base.order(); ++v) L.emplace_back(spec.dim, spec.L[v]);
  std::map<std::pair<Vertex, H>, Vertex> index;
  for (std::size_t i = 0; i < t.decode.size(); ++i) index[t.decode[i]] = static_cast<Vertex>(i);
  std::vector<Vertex> first(t.decode.size());
  std::vector<Vertex> second(t.decode.size());
  for (std::size_t i = 0; i < t.decode.size(); ++i) {
    auto [v, c] = t.decode[i];
    const Vertex w = spec.alpha.at(v);
    const H img = spec.gamma.apply(c);
    first[i] = index.at({w, L[w].reduce(img)});
    second[i] = index.at({w, L[w].reduce(img ^ spec.h0)});
  }
  return {Permutation(std::move(first)), Permutation(std::move(second))};
}

}  // namespace pairstab
