#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pairstab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on the dense vertex set 0..order-1.
///
/// Immutable after construction. Neighbor lists are sorted; adjacency is also
/// kept as a bit matrix so `adjacent` is O(1). Construction rejects loops and
/// out-of-range endpoints; repeated edges collapse.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return order_; }
  bool empty() const { return order_ == 0; }

  const std::vector<Vertex>& neighbors(Vertex u) const;
  int degree(Vertex u) const { return static_cast<int>(neighbors(u).size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (static_cast<std::size_t>(v) >> 6)] >>
            (v & 63)) & 1U;
  }

  std::size_t edge_count() const { return edge_count_; }
  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool contains(Vertex u) const { return u >= 0 && u < order_; }
  void check_vertex(Vertex u) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  int order_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
};

std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// The empty graph and K1 count as connected.
bool is_connected(const Graph& g);

struct Bipartition {
  // Set when the graph is bipartite. Lowest vertex of each component is on side 0.
  std::optional<std::array<std::vector<Vertex>, 2>> sides;
  // Set when it is not: a closed walk of odd length (first vertex repeated at the end).
  std::vector<Vertex> odd_closed_walk;

  bool bipartite() const { return sides.has_value(); }
};

Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// Lexicographically least pair u < v with N(u) = N(v), if any.
std::optional<std::pair<Vertex, Vertex>> r_thick_witness(const Graph& g);
bool is_r_thin(const Graph& g);

/// BFS distance; empty when u and v lie in different components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);
std::vector<int> bfs_distances(const Graph& g, Vertex source);  // -1 = unreachable

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[i] = vertex of the parent graph
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Vertex sets are sorted in ascending order; the result has no duplicates.
std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v);

/// True when no two vertices of `set` are adjacent (the empty set qualifies).
bool is_independent_set(const Graph& g, std::span<const Vertex> set);

Graph disjoint_union(const Graph& a, const Graph& b);

std::string describe(const Graph& g);

}  // namespace pairstab
