#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pairstab/graph.hpp"
#include "pairstab/permutation.hpp"

namespace pairstab {

inline constexpr std::uint64_t kDefaultBound = 1'000'000;

struct TwoFoldAutomorphism {
  Permutation first;
  Permutation second;

  friend bool operator==(const TwoFoldAutomorphism&, const TwoFoldAutomorphism&) = default;
  friend auto operator<=>(const TwoFoldAutomorphism&, const TwoFoldAutomorphism&) = default;
};

/// A tuple of permutations of V(Γ) indexed by V(Σ).
struct SigmaAutomorphism {
  Graph sigma;
  std::vector<Permutation> tuple;

  friend bool operator==(const SigmaAutomorphism& a, const SigmaAutomorphism& b) {
    return a.sigma == b.sigma && a.tuple == b.tuple;
  }
};

/// {u,v} in E iff {u^a, v^b} in E, for all u, v.
bool is_two_fold(const Graph& g, const Permutation& a, const Permutation& b);

/// All two-fold automorphisms, sorted. Computed as the layer-fixing colour
/// automorphisms of the double cover.
std::vector<TwoFoldAutomorphism> two_fold_group(const Graph& g, std::uint64_t bound = kDefaultBound);

/// Same set by direct backtracking over (a, b) image pairs. Slow; an oracle.
std::vector<TwoFoldAutomorphism> two_fold_group_direct(const Graph& g,
                                                       std::uint64_t bound = kDefaultBound);

/// Throws InvalidInput on shape mismatch.
bool is_sigma_automorphism(const Graph& g, const SigmaAutomorphism& s);
bool is_nondiagonal(const SigmaAutomorphism& s);

/// Nodes: every permutation occurring in a two-fold automorphism, sorted.
/// Arcs: (i, j) for each two-fold automorphism (nodes[i], nodes[j]).
struct TfDigraph {
  std::vector<Permutation> nodes;
  std::vector<std::vector<int>> out;  // sorted successor indices
  std::vector<char> loop;             // loop[i] iff (nodes[i], nodes[i]) is an arc

  int index_of(const Permutation& p) const;  // -1 when absent
  bool has_arc(int i, int j) const;
  std::size_t arc_count() const;
};

TfDigraph tf_digraph(const Graph& g, std::uint64_t bound = kDefaultBound);

/// All closed walks of length n in the TfDigraph, as C_n-automorphisms, sorted.
/// Throws BoundExceeded when there are more than `bound` of them.
std::vector<SigmaAutomorphism> cycle_automorphisms(const Graph& g, int n,
                                                   std::uint64_t bound = kDefaultBound);
std::vector<SigmaAutomorphism> cycle_automorphisms(const TfDigraph& d, int n, std::uint64_t bound);

/// Number of closed walks of length n (trace of the n-th adjacency power).
std::uint64_t count_cycle_automorphisms(const TfDigraph& d, int n);

/// Definitional search over tuple entries with forward checking. An oracle for
/// the digraph method; works for any Σ.
std::vector<SigmaAutomorphism> sigma_automorphisms_brute_force(const Graph& g, const Graph& sigma,
                                                               std::uint64_t bound);

/// Lexicographically least nondiagonal C_n-automorphism, decided by a
/// reachability table over (node, step, used-a-non-loop-arc) instead of
/// enumeration.
std::optional<SigmaAutomorphism> find_nondiagonal_cycle_automorphism(
    const Graph& g, int n, std::uint64_t bound = kDefaultBound);
std::optional<SigmaAutomorphism> find_nondiagonal_cycle_automorphism(const TfDigraph& d, int n);

/// (a1, a2, a1, a2, ...) over C_{2k}.
SigmaAutomorphism lift_twofold_to_even_cycle(const Graph& g, const TwoFoldAutomorphism& a, int k);

/// (α_1, ..., α_n)^φ = (α_{1^φ}, ..., α_{n^φ}); φ must be in Aut(Σ).
SigmaAutomorphism act_on_sigma_automorphism(const SigmaAutomorphism& s, const Permutation& phi);

/// Sub-tuple over the subgraph of Σ induced by `vertices`.
SigmaAutomorphism restrict_sigma_automorphism(const SigmaAutomorphism& s,
                                              std::span<const Vertex> vertices);

/// For a nondiagonal Σ-automorphism of an R-thin connected graph over a
/// connected Σ: no entry is an automorphism, all entries have the same order,
/// and entries differ across every Σ-edge. Returns the violated statements.
std::vector<std::string> r_thin_constraint_violations(const Graph& g, const SigmaAutomorphism& s);

/// Number of tuple entries that are automorphisms of g.
int entries_in_aut(const Graph& g, const SigmaAutomorphism& s);

/// Componentwise product and inverse.
SigmaAutomorphism multiply(const SigmaAutomorphism& a, const SigmaAutomorphism& b);
SigmaAutomorphism inverse(const SigmaAutomorphism& a);

}  // namespace pairstab
