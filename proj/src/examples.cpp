#include "pairstab/examples.hpp"

#include <functional>
#include <sstream>

#include "pairstab/constructors.hpp"
#include "pairstab/fixtures.hpp"
#include "pairstab/search.hpp"
#include "pairstab/stability.hpp"

namespace pairstab {

namespace {

std::string join(const std::set<int>& xs) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int x : xs) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace

std::vector<ExampleCheck> verify_worked_examples() {
  std::vector<ExampleCheck> checks;
  auto run = [&](std::string name, const std::function<bool(std::string&)>& body) {
    ExampleCheck c{std::move(name), false, ""};
    try {
      c.passed = body(c.detail);
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    checks.push_back(std::move(c));
  };

  const Graph g = fixtures::hexagon_triangle();

  run("gamma-star is two disjoint triangles", [&](std::string& d) {
    const Graph star = gamma_star(g);
    const auto comps = connected_components(star);
    d = std::to_string(comps.size()) + " components";
    if (comps.size() != 2) return false;
    for (const auto& c : comps) {
      if (!are_isomorphic(induced_subgraph(star, c).graph, cycle(3))) return false;
    }
    return true;
  });

  run("L(u) = {3} for every vertex", [&](std::string& d) {
    const auto profile = compatibility_profile(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      const auto& ls = profile.lengths[u];
      if (ls.truncated || ls.lengths != std::set<int>{3}) {
        d = "u" + std::to_string(u + 1) + ": " + join(ls.lengths);
        return false;
      }
    }
    return true;
  });

  run("incompatible exactly for n in {3,6} within 3..12", [&](std::string& d) {
    std::set<int> incompatible;
    for (int n = 3; n <= 12; ++n) {
      if (!is_compatible(g, n).compatible) incompatible.insert(n);
    }
    d = "incompatible " + join(incompatible);
    return incompatible == std::set<int>{3, 6};
  });

  const ProductGraph p3 = direct_product(g, cycle(3));
  const ProductGraph p6 = direct_product(g, cycle(6));

  run("sigma table maps (u2,0) to (u4,2)", [&](std::string& d) {
    const Permutation s = fixtures::table_permutation(fixtures::sigma_c3_table(), g.order(), 3);
    const auto [u, i] = p3.decode(s.at(p3.encode(1, 0)));
    d = "(u" + std::to_string(u + 1) + "," + std::to_string(i) + ")";
    return u == 3 && i == 2;
  });

  run("sigma is an automorphism of the product with C3", [&](std::string&) {
    return is_automorphism(p3.graph,
                           fixtures::table_permutation(fixtures::sigma_c3_table(), g.order(), 3));
  });

  run("sigma does not preserve the layers", [&](std::string&) {
    return !preserves_layers(p3, fixtures::table_permutation(fixtures::sigma_c3_table(), g.order(), 3));
  });

  run("tau table maps (u6,5) to (u6,0)", [&](std::string& d) {
    const Permutation t = fixtures::table_permutation(fixtures::tau_c6_table(), g.order(), 6);
    const auto [u, i] = p6.decode(t.at(p6.encode(5, 5)));
    d = "(u" + std::to_string(u + 1) + "," + std::to_string(i) + ")";
    return u == 5 && i == 0;
  });

  run("tau is an automorphism of the product with C6", [&](std::string&) {
    return is_automorphism(p6.graph,
                           fixtures::table_permutation(fixtures::tau_c6_table(), g.order(), 6));
  });

  run("tau does not preserve the layers", [&](std::string&) {
    return !preserves_layers(p6, fixtures::table_permutation(fixtures::tau_c6_table(), g.order(), 6));
  });

  auto verdict_check = [&](const Graph& s, bool want_stable) {
    return [&g, s, want_stable](std::string& d) {
      const StabilityVerdict v = pair_stability(g, s);
      d = to_string(v.kind) + ", |Aut(product)| = " + std::to_string(v.aut_product) +
          ", |Aut|*|Aut| = " + std::to_string(v.aut_g * v.aut_s);
      return v.stable() == want_stable;
    };
  };
  run("pair with K2 is stable", verdict_check(complete(2), true));
  run("pair with C3 is unstable", verdict_check(cycle(3), false));
  run("pair with C6 is unstable", verdict_check(cycle(6), false));

  return checks;
}

}  // namespace pairstab
