#include "pairstab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "pairstab/errors.hpp"

namespace pairstab {

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<Vertex>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Vertex x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void check_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidInput("permutation degree mismatch: " + std::to_string(p.degree()) + " vs " +
                       std::to_string(q.degree()));
  }
}

}  // namespace

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (Vertex x : image_) {
    if (x < 0 || static_cast<std::size_t>(x) >= image_.size() || hit[x]) {
      throw InvalidInput("not a permutation: " + to_string());
    }
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<Vertex> image(static_cast<std::size_t>(degree));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::rotation(int degree, int shift) {
  std::vector<Vertex> image(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) image[i] = ((i + shift) % degree + degree) % degree;
  return Permutation(std::move(image));
}

Permutation Permutation::reflection(int degree) {
  std::vector<Vertex> image(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) image[i] = (degree - i) % degree;
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(int degree, Vertex a, Vertex b) {
  std::vector<Vertex> image = identity(degree).image();
  std::swap(image.at(a), image.at(b));
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<Vertex>(i)) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? "," : "") << image_[i];
  os << ']';
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_same_degree(p, q);
  std::vector<Vertex> image(static_cast<std::size_t>(p.degree()));
  for (int u = 0; u < p.degree(); ++u) image[u] = q.at(p.at(u));
  return Permutation(std::move(image));
}

Permutation inverse(const Permutation& p) {
  std::vector<Vertex> image(static_cast<std::size_t>(p.degree()));
  for (int u = 0; u < p.degree(); ++u) image[p.at(u)] = u;
  return Permutation(std::move(image));
}

Permutation power(const Permutation& p, std::uint64_t exponent) {
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  while (exponent) {
    if (exponent & 1U) result = compose(result, base);
    base = compose(base, base);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t order_of(const Permutation& p) {
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  std::uint64_t result = 1;
  for (int s = 0; s < p.degree(); ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0;
    for (Vertex x = s; !seen[x]; x = p.at(x)) {
      seen[x] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) {
    throw InvalidInput("permutation degree " + std::to_string(p.degree()) +
                       " does not match graph order " + std::to_string(g.order()));
  }
  // Edge counts agree, so mapping every edge onto an edge is enough.
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (!g.adjacent(p.at(u), p.at(v))) return false;
    }
  }
  return true;
}

Permutation parse_permutation(const std::string& text) {
  std::vector<Vertex> image;
  std::string body;
  for (char c : text) {
    if (c == '[' || c == ']' || c == ' ' || c == '\t' || c == '\n') continue;
    body.push_back(c);
  }
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InvalidInput("malformed permutation: " + text);
    try {
      std::size_t used = 0;
      image.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InvalidInput("malformed permutation: " + text);
    } catch (const std::logic_error&) {
      throw InvalidInput("malformed permutation: " + text);
    }
  }
  return Permutation(std::move(image));
}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators,
                                   std::uint64_t order)
    : degree_(degree), generators_(std::move(generators)), order_(order) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw InvalidInput("generator degree mismatch");
  }
}

std::vector<Permutation> enumerate_elements(int degree, std::span<const Permutation> generators,
                                            std::uint64_t bound) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
  }
  std::unordered_set<std::vector<Vertex>, ImageHash> seen;
  std::vector<Permutation> elements{Permutation::identity(degree)};
  seen.insert(elements.front().image());
  if (bound < 1) throw BoundExceeded("group has more than 0 elements");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : generators) {
      Permutation next = compose(elements[i], s);
      if (seen.insert(next.image()).second) {
        if (elements.size() >= bound) {
          throw BoundExceeded("group has more than " + std::to_string(bound) + " elements");
        }
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<Permutation> enumerate_elements(const PermutationGroup& group, std::uint64_t bound) {
  if (group.order() > bound) {
    throw BoundExceeded("group of order " + std::to_string(group.order()) + " exceeds bound " +
                        std::to_string(bound));
  }
  auto elements = enumerate_elements(group.degree(), group.generators(), bound);
  if (elements.size() != group.order()) {
    throw std::logic_error("enumerated " + std::to_string(elements.size()) +
                           " elements but group order is " + std::to_string(group.order()));
  }
  return elements;
}

std::vector<std::vector<Vertex>> orbits(int degree, std::span<const Permutation> generators) {
  std::vector<int> label(static_cast<std::size_t>(degree), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < degree; ++s) {
    if (label[s] >= 0) continue;
    std::vector<Vertex> orbit{s};
    label[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : generators) {
        Vertex y = g.at(orbit[i]);
        if (label[y] < 0) {
          label[y] = label[s];
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace pairstab
