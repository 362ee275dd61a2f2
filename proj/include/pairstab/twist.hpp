#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pairstab/graph.hpp"
#include "pairstab/permutation.hpp"

namespace pairstab {

/// Element of H = Z_2^dim. Bit i of the tuple (b_0, ..., b_{dim-1}) is stored at
/// mask position dim-1-i, so numeric order on masks is lexicographic order on
/// tuples.
using H = std::uint32_t;

/// A subgroup of Z_2^dim held as a fully reduced row-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int dim, std::span<const H> generators);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<H>& basis() const { return basis_; }

  bool contains(H x) const { return reduce(x) == 0; }
  /// Least member of the coset x + S.
  H reduce(H x) const;
  /// All members, ascending.
  std::vector<H> elements() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

 private:
  int dim_ = 0;
  std::vector<H> basis_;  // descending by leading bit
};

/// Linear map on Z_2^dim given by its rows: h -> sum of rows[i] over set b_i.
struct BitMatrix {
  int dim = 0;
  std::vector<H> rows;  // rows[i] is the image of the i-th unit tuple

  H apply(H h) const;
  bool invertible() const;
  static BitMatrix identity(int dim);
};

struct TwistSpec {
  Graph base;
  Permutation alpha;
  int dim = 0;
  BitMatrix gamma;
  std::vector<std::vector<H>> L;                  // generators of L(v), one list per vertex
  std::map<std::pair<Vertex, Vertex>, std::vector<H>> omega;  // every arc of `base`
  H h0 = 0;
};

/// Throws InvalidInput naming the first violated condition.
void validate_twist(const TwistSpec& spec);

struct TwistGraph {
  Graph graph;
  // vertex -> (base vertex, least member of its coset of L(base vertex))
  std::vector<std::pair<Vertex, H>> decode;
};

/// Builds the twist after validating the spec. Vertices are ordered by base
/// vertex, then by coset representative.
TwistGraph twist_construct(const TwistSpec& spec);

/// The two-fold automorphism carried by a valid twist:
/// (v, c) -> (v^alpha, c^gamma) and (v, c) -> (v^alpha, c^gamma + h0).
std::pair<Permutation, Permutation> twist_two_fold(const TwistSpec& spec, const TwistGraph& t);

/// Helpers for bit tuples <-> masks.
H tuple_to_mask(std::span<const int> bits);
std::vector<int> mask_to_tuple(H x, int dim);

}  // namespace pairstab
