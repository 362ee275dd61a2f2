#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pairstab/graph.hpp"

namespace pairstab {

/// A bijection of 0..degree-1 stored as its image sequence.
///
/// Action is on the right, matching the exponent notation u^p: composing p
/// then q gives u^{pq} = (u^p)^q, i.e. compose(p, q).at(u) == q.at(p.at(u)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `image` is a bijection of 0..size-1.
  explicit Permutation(std::vector<Vertex> image);
  Permutation(std::initializer_list<Vertex> image) : Permutation(std::vector<Vertex>(image)) {}

  static Permutation identity(int degree);
  /// i -> i + shift (mod degree).
  static Permutation rotation(int degree, int shift);
  /// i -> -i (mod degree).
  static Permutation reflection(int degree);
  /// Swaps a and b, fixes everything else.
  static Permutation transposition(int degree, Vertex a, Vertex b);

  int degree() const { return static_cast<int>(image_.size()); }
  Vertex at(Vertex u) const { return image_[static_cast<std::size_t>(u)]; }
  Vertex operator()(Vertex u) const { return at(u); }
  const std::vector<Vertex>& image() const { return image_; }

  bool is_identity() const;
  std::string to_string() const;  // "[2,0,1]"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<Vertex> image_;
};

/// u^{compose(p,q)} = (u^p)^q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, std::uint64_t exponent);
std::uint64_t order_of(const Permutation& p);

/// {u,v} in E iff {u^p, v^p} in E, checked over all pairs.
bool is_automorphism(const Graph& g, const Permutation& p);

/// Parses "[2,0,1]" (whitespace tolerated).
Permutation parse_permutation(const std::string& text);

/// Generator-based permutation group with an exact order.
class PermutationGroup {
 public:
  PermutationGroup() = default;
  PermutationGroup(int degree, std::vector<Permutation> generators, std::uint64_t order);

  static PermutationGroup trivial(int degree) { return PermutationGroup(degree, {}, 1); }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::uint64_t order() const { return order_; }

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::uint64_t order_ = 1;
};

/// All distinct elements generated by `generators`, sorted lexicographically.
/// Throws BoundExceeded as soon as more than `bound` elements appear.
std::vector<Permutation> enumerate_elements(int degree, std::span<const Permutation> generators,
                                            std::uint64_t bound);
std::vector<Permutation> enumerate_elements(const PermutationGroup& group, std::uint64_t bound);

/// Orbits of the group generated by `generators`, each sorted, ordered by least member.
std::vector<std::vector<Vertex>> orbits(int degree, std::span<const Permutation> generators);

}  // namespace pairstab
