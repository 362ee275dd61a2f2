#include "pairstab/constructors.hpp"

#include <algorithm>

#include "pairstab/errors.hpp"

namespace pairstab {

Graph cycle(int n) {
  if (n < 3) throw InvalidInput("cycle length must be at least 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  if (n < 1) throw InvalidInput("complete graph needs at least 1 vertex, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph path(int n) {
  if (n < 1) throw InvalidInput("path needs at least 1 vertex, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

ProductGraph direct_product(const Graph& g, const Graph& h) {
  if (g.empty() || h.empty()) throw InvalidInput("direct product of an empty graph");
  ProductGraph p;
  p.left_order = g.order();
  p.right_order = h.order();
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count() * h.edge_count());
  for (auto [u, v] : g.edges()) {
    for (auto [x, y] : h.edges()) {
      edges.emplace_back(p.encode(u, x), p.encode(v, y));
      edges.emplace_back(p.encode(u, y), p.encode(v, x));
    }
  }
  p.graph = Graph(g.order() * h.order(), edges);
  return p;
}

ProductGraph double_cover(const Graph& g) {
  if (g.empty()) {
    ProductGraph p;
    p.right_order = 2;
    return p;
  }
  return direct_product(g, complete(2));
}

Graph boolean_square(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex w = 0; w < g.order(); ++w) {
    const auto& nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) edges.emplace_back(nb[i], nb[j]);
    }
  }
  return Graph(g.order(), edges);
}

Quotient quotient_by_partition(const Graph& g, std::span<const std::vector<Vertex>> blocks) {
  Quotient q;
  q.block_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (const auto& b : blocks) {
    if (b.empty()) throw InvalidInput("partition has an empty block");
    std::vector<Vertex> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    for (Vertex v : sorted) g.check_vertex(v);
    q.blocks.push_back(std::move(sorted));
  }
  std::sort(q.blocks.begin(), q.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < q.blocks.size(); ++i) {
    for (Vertex v : q.blocks[i]) {
      if (q.block_of[v] >= 0) {
        throw InvalidInput("not a partition: vertex " + std::to_string(v) + " is in two blocks");
      }
      q.block_of[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (q.block_of[v] < 0) {
      throw InvalidInput("not a partition: vertex " + std::to_string(v) + " is in no block");
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (q.block_of[u] != q.block_of[v]) edges.emplace_back(q.block_of[u], q.block_of[v]);
  }
  q.graph = Graph(static_cast<int>(q.blocks.size()), edges);
  return q;
}

Quotient quotient_by_group(const Graph& g, std::span<const Permutation> generators) {
  for (const auto& s : generators) {
    if (!is_automorphism(g, s)) {
      throw InvalidInput("generator " + s.to_string() + " is not an automorphism");
    }
  }
  auto orbit_list = orbits(g.order(), generators);
  return quotient_by_partition(g, orbit_list);
}

Permutation lift_left(const ProductGraph& p, const Permutation& alpha) {
  if (alpha.degree() != p.left_order) throw InvalidInput("left lift: degree mismatch");
  std::vector<Vertex> image(static_cast<std::size_t>(p.graph.order()));
  for (Vertex w = 0; w < p.graph.order(); ++w) {
    auto [u, x] = p.decode(w);
    image[w] = p.encode(alpha.at(u), x);
  }
  return Permutation(std::move(image));
}

Permutation lift_right(const ProductGraph& p, const Permutation& delta) {
  if (delta.degree() != p.right_order) throw InvalidInput("right lift: degree mismatch");
  std::vector<Vertex> image(static_cast<std::size_t>(p.graph.order()));
  for (Vertex w = 0; w < p.graph.order(); ++w) {
    auto [u, x] = p.decode(w);
    image[w] = p.encode(u, delta.at(x));
  }
  return Permutation(std::move(image));
}

}  // namespace pairstab
