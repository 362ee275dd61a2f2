#include "pairstab/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pairstab/errors.hpp"

namespace pairstab {

namespace {

using Cells = std::vector<std::vector<Vertex>>;
using Signature = std::vector<int>;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw BoundExceeded("group order overflows 64 bits");
  return r;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  void absorb(const Permutation& p) {
    for (int u = 0; u < p.degree(); ++u) unite(u, p.at(u));
  }

 private:
  std::vector<int> parent_;
};

class Refiner {
 public:
  Refiner(const Graph& g, std::span<const int> colors, const SearchOptions& options)
      : g_(g), options_(options), count_(static_cast<std::size_t>(g.order()), 0) {
    if (!colors.empty() && static_cast<int>(colors.size()) != g.order()) {
      throw InvalidInput("colour vector length does not match graph order");
    }
    colors_.assign(colors.begin(), colors.end());
    if (colors_.empty()) colors_.assign(static_cast<std::size_t>(g.order()), 0);
  }

  Cells initial() const {
    std::map<int, std::vector<Vertex>> by_color;
    for (Vertex v = 0; v < g_.order(); ++v) by_color[colors_[v]].push_back(v);
    Cells cells;
    for (auto& [c, cell] : by_color) cells.push_back(std::move(cell));
    return cells;
  }

  // Splits every cell by neighbour counts into `cells[s]`; sub-cells keep the
  // parent's position and are ordered by count. True if anything split.
  bool split_by(Cells& cells, std::size_t s) {
    std::fill(count_.begin(), count_.end(), 0);
    for (Vertex w : cells[s]) {
      for (Vertex x : g_.neighbors(w)) ++count_[x];
    }
    bool split = false;
    Cells out;
    out.reserve(cells.size() + 4);
    for (auto& cell : cells) {
      if (cell.size() == 1 ||
          std::all_of(cell.begin(), cell.end(),
                      [&](Vertex v) { return count_[v] == count_[cell.front()]; })) {
        out.push_back(std::move(cell));
        continue;
      }
      split = true;
      std::stable_sort(cell.begin(), cell.end(),
                       [&](Vertex a, Vertex b) { return count_[a] < count_[b]; });
      std::size_t start = 0;
      for (std::size_t i = 1; i <= cell.size(); ++i) {
        if (i == cell.size() || count_[cell[i]] != count_[cell[start]]) {
          std::vector<Vertex> part(cell.begin() + static_cast<std::ptrdiff_t>(start),
                                   cell.begin() + static_cast<std::ptrdiff_t>(i));
          std::sort(part.begin(), part.end());
          out.push_back(std::move(part));
          start = i;
        }
      }
    }
    cells = std::move(out);
    return split;
  }

  Cells refine(Cells cells) {
    if (++nodes_ > options_.node_budget) {
      throw BoundExceeded("automorphism search exceeded " + std::to_string(options_.node_budget) +
                          " nodes");
    }
    std::size_t s = 0;
    while (s < cells.size()) {
      s = split_by(cells, s) ? 0 : s + 1;
    }
    return cells;
  }

  static Cells individualize(const Cells& cells, std::size_t t, Vertex v) {
    Cells out;
    out.reserve(cells.size() + 1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i != t) {
        out.push_back(cells[i]);
        continue;
      }
      out.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex w : cells[i]) {
        if (w != v) rest.push_back(w);
      }
      out.push_back(std::move(rest));
    }
    return out;
  }

  // First smallest non-singleton cell; -1 when discrete.
  static int target(const Cells& cells) {
    int best = -1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && (best < 0 || cells[i].size() < cells[best].size())) {
        best = static_cast<int>(i);
      }
    }
    return best;
  }

  // Cell sizes plus the sparse quotient row of each cell's first vertex. Equal
  // for any two nodes related by an automorphism.
  Signature signature(const Cells& cells) const {
    std::vector<int> cell_of(static_cast<std::size_t>(g_.order()));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (Vertex v : cells[i]) cell_of[v] = static_cast<int>(i);
    }
    Signature sig;
    std::vector<int> row(cells.size(), 0);
    for (const auto& cell : cells) {
      sig.push_back(static_cast<int>(cell.size()));
      sig.push_back(colors_[cell.front()]);
      std::fill(row.begin(), row.end(), 0);
      for (Vertex x : g_.neighbors(cell.front())) ++row[cell_of[x]];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j]) {
          sig.push_back(static_cast<int>(j));
          sig.push_back(row[j]);
        }
      }
      sig.push_back(-1);
    }
    return sig;
  }

  static std::vector<Vertex> flatten(const Cells& cells) {
    std::vector<Vertex> out;
    for (const auto& c : cells) out.insert(out.end(), c.begin(), c.end());
    return out;
  }

  const Graph& graph() const { return g_; }
  const std::vector<int>& colors() const { return colors_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const Graph& g_;
  SearchOptions options_;
  std::vector<int> colors_;
  std::vector<int> count_;
  std::uint64_t nodes_ = 0;
};

struct PathLevel {
  Cells cells;  // node before individualizing
  std::size_t target = 0;
  Vertex chosen = 0;
};

class AutomorphismSearcher {
 public:
  AutomorphismSearcher(const Graph& g, std::span<const int> colors, const SearchOptions& options)
      : refiner_(g, colors, options) {}

  AutomorphismSearch run() {
    const Graph& g = refiner_.graph();
    Cells node = refiner_.refine(refiner_.initial());
    for (int t = Refiner::target(node); t >= 0; t = Refiner::target(node)) {
      sigs_.push_back(refiner_.signature(node));
      Vertex v = node[t].front();
      path_.push_back({node, static_cast<std::size_t>(t), v});
      node = refiner_.refine(Refiner::individualize(node, t, v));
    }
    sigs_.push_back(refiner_.signature(node));
    first_leaf_ = Refiner::flatten(node);

    AutomorphismSearch result;
    std::vector<Permutation> generators;
    std::uint64_t order = 1;
    result.orbit_sizes.assign(path_.size(), 1);
    for (int level = static_cast<int>(path_.size()) - 1; level >= 0; --level) {
      const PathLevel& pl = path_[level];
      UnionFind uf(g.order());
      for (const auto& s : generators) uf.absorb(s);
      for (Vertex w : pl.cells[pl.target]) {
        if (w == pl.chosen || uf.find(w) == uf.find(pl.chosen)) continue;
        if (auto found = descend(pl.cells, level, pl.target, w)) {
          uf.absorb(*found);
          generators.push_back(std::move(*found));
          result.generator_level.push_back(level);
        }
      }
      std::uint64_t orbit = 0;
      for (Vertex w : pl.cells[pl.target]) {
        if (uf.find(w) == uf.find(pl.chosen)) ++orbit;
      }
      result.orbit_sizes[level] = orbit;
      order = checked_mul(order, orbit);
    }
    for (const auto& pl : path_) result.base.push_back(pl.chosen);
    result.group = PermutationGroup(g.order(), std::move(generators), order);
    result.nodes_visited = refiner_.nodes();
    return result;
  }

  const std::vector<PathLevel>& path() const { return path_; }
  Refiner& refiner() { return refiner_; }

 private:
  // Depth-first search below `node` (at `depth` on a path whose signatures so
  // far match the first path) after individualizing x in cell t.
  std::optional<Permutation> descend(const Cells& node, int depth, std::size_t t, Vertex x) {
    Cells child = refiner_.refine(Refiner::individualize(node, t, x));
    const std::size_t d = static_cast<std::size_t>(depth) + 1;
    if (refiner_.signature(child) != sigs_[d]) return std::nullopt;
    if (d == path_.size()) {
      std::vector<Vertex> leaf = Refiner::flatten(child);
      std::vector<Vertex> image(leaf.size());
      for (std::size_t k = 0; k < leaf.size(); ++k) image[first_leaf_[k]] = leaf[k];
      Permutation p(std::move(image));
      if (is_automorphism(refiner_.graph(), p)) return p;
      return std::nullopt;
    }
    const std::size_t t2 = path_[d].target;
    const std::vector<Vertex> candidates = child[t2];
    for (Vertex y : candidates) {
      if (auto r = descend(child, static_cast<int>(d), t2, y)) return r;
    }
    return std::nullopt;
  }

  Refiner refiner_;
  std::vector<PathLevel> path_;
  std::vector<Signature> sigs_;
  std::vector<Vertex> first_leaf_;
};

// Leaf certificate: colours then packed upper-triangle adjacency in leaf order.
Signature certificate(const Graph& g, const std::vector<int>& colors,
                      const std::vector<Vertex>& order) {
  Signature cert;
  for (Vertex v : order) cert.push_back(colors[v]);
  int word = 0;
  int bits = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      word = (word << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
      if (++bits == 30) {
        cert.push_back(word);
        word = 0;
        bits = 0;
      }
    }
  }
  cert.push_back(word);
  cert.push_back(bits);
  return cert;
}

class CanonicalSearcher {
 public:
  CanonicalSearcher(const Graph& g, std::span<const int> colors, const SearchOptions& options)
      : auts_(g, colors, options) {}

  CanonicalLabeling run() {
    AutomorphismSearch info = auts_.run();
    info_ = &info;
    Refiner& r = auts_.refiner();
    Cells root = r.refine(r.initial());
    explore(root, 0, true);
    const Graph& g = r.graph();
    std::vector<Vertex> position(static_cast<std::size_t>(g.order()));
    for (std::size_t k = 0; k < best_leaf_.size(); ++k) position[best_leaf_[k]] = static_cast<int>(k);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
      edges.emplace_back(std::min(position[u], position[v]), std::max(position[u], position[v]));
    }
    return CanonicalLabeling{best_leaf_, Graph(g.order(), edges)};
  }

 private:
  void explore(const Cells& node, std::size_t depth, bool on_first_path) {
    Refiner& r = auts_.refiner();
    current_.push_back(r.signature(node));
    // Prune when this prefix already compares greater than the best sequence.
    if (have_best_) {
      std::size_t len = std::min(current_.size(), best_.size());
      if (std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(len),
                                       current_.begin(),
                                       current_.begin() + static_cast<std::ptrdiff_t>(len))) {
        current_.pop_back();
        return;
      }
    }
    int t = Refiner::target(node);
    if (t < 0) {
      std::vector<Vertex> leaf = Refiner::flatten(node);
      current_.push_back(certificate(r.graph(), r.colors(), leaf));
      if (!have_best_ || current_ < best_) {
        best_ = current_;
        best_leaf_ = leaf;
        have_best_ = true;
      }
      current_.pop_back();
      current_.pop_back();
      return;
    }
    std::vector<Vertex> candidates = node[t];
    const auto& path = auts_.path();
    if (on_first_path) {
      // Children in one orbit of the stabilizer of this first-path node are
      // equivalent; keep the least vertex of each orbit.
      std::vector<Permutation> stab;
      const auto& gens = info_->group.generators();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (static_cast<std::size_t>(info_->generator_level[i]) >= depth) stab.push_back(gens[i]);
      }
      UnionFind uf(r.graph().order());
      for (const auto& s : stab) uf.absorb(s);
      std::vector<Vertex> reps;
      std::vector<int> seen_root;
      for (Vertex y : candidates) {
        int root = uf.find(y);
        if (std::find(seen_root.begin(), seen_root.end(), root) == seen_root.end()) {
          seen_root.push_back(root);
          reps.push_back(y);
        }
      }
      candidates = std::move(reps);
    }
    for (Vertex y : candidates) {
      bool next_first = on_first_path && depth < path.size() && y == path[depth].chosen;
      explore(r.refine(Refiner::individualize(node, t, y)), depth + 1, next_first);
    }
    current_.pop_back();
  }

  AutomorphismSearcher auts_;
  const AutomorphismSearch* info_ = nullptr;
  std::vector<Signature> current_;
  std::vector<Signature> best_;
  std::vector<Vertex> best_leaf_;
  bool have_best_ = false;
};

}  // namespace

AutomorphismSearch search_automorphisms(const Graph& g, std::span<const int> colors,
                                        const SearchOptions& options) {
  return AutomorphismSearcher(g, colors, options).run();
}

PermutationGroup automorphism_group(const Graph& g, std::span<const int> colors,
                                    const SearchOptions& options) {
  return search_automorphisms(g, colors, options).group;
}

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors,
                                     const SearchOptions& options) {
  return CanonicalSearcher(g, colors, options).run();
}

std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h,
                                          const SearchOptions& options) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  CanonicalLabeling cg = canonical_labeling(g, {}, options);
  CanonicalLabeling ch = canonical_labeling(h, {}, options);
  if (!(cg.form == ch.form)) return std::nullopt;
  std::vector<Vertex> image(static_cast<std::size_t>(g.order()));
  for (std::size_t k = 0; k < image.size(); ++k) image[cg.labeling[k]] = ch.labeling[k];
  Permutation phi(std::move(image));
  for (auto [u, v] : g.edges()) {
    if (!h.adjacent(phi.at(u), phi.at(v))) {
      throw std::logic_error("canonical forms agree but the induced map is not an isomorphism");
    }
  }
  return phi;
}

std::vector<Permutation> brute_force_automorphisms(const Graph& g, std::uint64_t bound,
                                                   std::span<const int> colors) {
  const int n = g.order();
  if (!colors.empty() && static_cast<int>(colors.size()) != n) {
    throw InvalidInput("colour vector length does not match graph order");
  }
  // BFS order so that every non-root vertex has an earlier neighbour (its parent).
  std::vector<Vertex> order;
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    for (; head < order.size(); ++head) {
      for (Vertex y : g.neighbors(order[head])) {
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = order[head];
          order.push_back(y);
        }
      }
    }
  }
  std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<Permutation> out;

  auto consistent = [&](std::size_t idx, Vertex x) {
    Vertex u = order[idx];
    if (used[x] || g.degree(u) != g.degree(x)) return false;
    if (!colors.empty() && colors[u] != colors[x]) return false;
    for (std::size_t k = 0; k < idx; ++k) {
      Vertex v = order[k];
      if (g.adjacent(u, v) != g.adjacent(x, image[v])) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      if (out.size() >= bound) {
        throw BoundExceeded("more than " + std::to_string(bound) + " automorphisms");
      }
      out.emplace_back(image);
      return;
    }
    Vertex u = order[idx];
    auto try_candidate = [&](Vertex x) {
      if (!consistent(idx, x)) return;
      image[u] = x;
      used[x] = 1;
      self(self, idx + 1);
      used[x] = 0;
      image[u] = -1;
    };
    if (parent[u] >= 0) {
      for (Vertex x : g.neighbors(image[parent[u]])) try_candidate(x);
    } else {
      for (Vertex x = 0; x < n; ++x) try_candidate(x);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pairstab
