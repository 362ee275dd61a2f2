#include "pairstab/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "pairstab/errors.hpp"

namespace pairstab {

Graph::Graph(int order) : Graph(order, std::span<const Edge>{}) {}

Graph::Graph(int order, std::span<const Edge> edges) : order_(order) {
  if (order < 0) throw InvalidInput("graph order must be non-negative");
  words_ = (static_cast<std::size_t>(order) + 63) / 64;
  adj_.assign(static_cast<std::size_t>(order), {});
  bits_.assign(static_cast<std::size_t>(order) * words_, 0);
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) continue;
    bits_[static_cast<std::size_t>(u) * words_ + (static_cast<std::size_t>(v) >> 6)] |=
        std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (static_cast<std::size_t>(u) >> 6)] |=
        std::uint64_t{1} << (u & 63);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

void Graph::check_vertex(Vertex u) const {
  if (!contains(u)) {
    throw InvalidInput("vertex " + std::to_string(u) + " out of range for graph of order " +
                       std::to_string(order_));
  }
}

const std::vector<Vertex>& Graph::neighbors(Vertex u) const {
  check_vertex(u);
  return adj_[u];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

Bipartition bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::array<std::vector<Vertex>, 2> sides;
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          parent[y] = x;
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          // Same colour on both ends: root..x, y..root closes an odd walk.
          std::vector<Vertex> to_x;
          for (Vertex w = x; w != -1; w = parent[w]) to_x.push_back(w);
          std::reverse(to_x.begin(), to_x.end());
          std::vector<Vertex> walk = to_x;
          for (Vertex w = y; w != -1; w = parent[w]) walk.push_back(w);
          return Bipartition{std::nullopt, std::move(walk)};
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) sides[side[v]].push_back(v);
  return Bipartition{std::move(sides), {}};
}

bool is_bipartite(const Graph& g) { return bipartition(g).bipartite(); }

std::optional<std::pair<Vertex, Vertex>> r_thick_witness(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.neighbors(u) == g.neighbors(v)) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

bool is_r_thin(const Graph& g) { return !r_thick_witness(g).has_value(); }

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(v);
  int d = bfs_distances(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> original(vertices.begin(), vertices.end());
  for (Vertex v : original) g.check_vertex(v);
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()), original.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < original.size(); ++i) {
    for (std::size_t j = i + 1; j < original.size(); ++j) {
      if (g.adjacent(original[i], original[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return InducedSubgraph{Graph(static_cast<int>(original.size()), edges), std::move(original)};
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (g.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "Graph(order=" << g.order() << ", edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ", ") << u << "-" << v;
    first = false;
  }
  os << "])";
  return os.str();
}

}  // namespace pairstab
