#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pairstab/graph.hpp"
#include "pairstab/permutation.hpp"

namespace pairstab {

/// C_n on 0..n-1 with i ~ i±1 (mod n). Requires n >= 3.
Graph cycle(int n);
/// K_n. Requires n >= 1.
Graph complete(int n);
/// Path on n vertices 0-1-...-(n-1).
Graph path(int n);

/// Direct product together with its coordinate scheme: (u, x) is stored as
/// u * right_order + x.
struct ProductGraph {
  Graph graph;
  int left_order = 0;
  int right_order = 0;

  Vertex encode(Vertex u, Vertex x) const { return u * right_order + x; }
  std::pair<Vertex, Vertex> decode(Vertex w) const { return {w / right_order, w % right_order}; }
  Vertex layer(Vertex w) const { return w % right_order; }
  Vertex base(Vertex w) const { return w / right_order; }
};

ProductGraph direct_product(const Graph& g, const Graph& h);

/// g x K2; (u, i) for i in {0, 1} is vertex 2u + i.
ProductGraph double_cover(const Graph& g);

/// u ~ v iff u != v and they have a common neighbour.
Graph boolean_square(const Graph& g);

/// Blocks are renumbered by ascending least element; two blocks are adjacent
/// when some edge of g runs between them.
struct Quotient {
  Graph graph;
  std::vector<std::vector<Vertex>> blocks;  // sorted, ordered by least element
  std::vector<int> block_of;                // vertex -> block index
};

Quotient quotient_by_partition(const Graph& g, std::span<const std::vector<Vertex>> blocks);
/// Quotient by the orbits of the group generated by `generators` (each must be
/// an automorphism of g).
Quotient quotient_by_group(const Graph& g, std::span<const Permutation> generators);

/// Lifts a permutation of V(g) to g x h acting on the left coordinate, and one
/// of V(h) acting on the right coordinate.
Permutation lift_left(const ProductGraph& p, const Permutation& alpha);
Permutation lift_right(const ProductGraph& p, const Permutation& delta);

}  // namespace pairstab
