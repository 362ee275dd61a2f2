#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pairstab/constructors.hpp"
#include "pairstab/graph.hpp"
#include "pairstab/permutation.hpp"
#include "pairstab/sigma.hpp"

namespace pairstab {

/// u ~ v iff u != v and deg(u) = deg(v) = 2|N(u) ∩ N(v)|.
Graph gamma_star(const Graph& g);

struct LengthSet {
  std::set<int> lengths;
  // One cycle of Γ* through u for each member >= 3, starting at u.
  std::map<int, std::vector<Vertex>> cycles;
  bool truncated = false;  // cycles longer than the search bound were not examined
};

/// L(u) over a precomputed Γ*. max_len < 0 means "no cap" (the order of Γ*).
LengthSet length_set_in(const Graph& star, Vertex u, int max_len = -1);
LengthSet length_set(const Graph& g, Vertex u, int max_len = -1);

struct CompatibilityProfile {
  Graph gamma_star;
  std::vector<LengthSet> lengths;
  int search_bound = 0;

  bool truncated() const;
};

CompatibilityProfile compatibility_profile(const Graph& g, int max_len = -1);

struct Compatibility {
  bool compatible = false;
  std::optional<Vertex> witness;  // a vertex whose L(u) misses the relevant length
};

/// Throws BoundExceeded when the answer depends on a truncated L(u).
Compatibility is_compatible(const CompatibilityProfile& profile, int n);
Compatibility is_compatible(const Graph& g, int n);

/// True iff every Γ*-edge {u,v} has N(u) ∩ N(v) not independent in g.
bool common_neighbourhoods_not_independent(const Graph& g);
/// The least Γ*-edge whose common neighbourhood is independent, if any.
std::optional<Edge> independent_common_neighbourhood_edge(const Graph& g);

struct K2Factor {
  Graph factor;            // Γ1 with g ≅ Γ1 x K2
  Permutation involution;  // the side-swapping automorphism it came from
  Permutation isomorphism; // g -> Γ1 x K2
};

/// Requires g connected.
std::optional<K2Factor> has_k2_factor(const Graph& g, std::uint64_t bound = kDefaultBound);
/// Oracle: tries every labelled Γ1 on |V|/2 vertices.
std::optional<Graph> k2_factor_brute_force(const Graph& g);

/// Some Γ1 with g ≅ Γ1 x h, by trying every labelled Γ1 with the right order
/// and edge count. Throws BoundExceeded past `max_candidates`.
std::optional<Graph> find_cofactor(const Graph& g, const Graph& h,
                                   std::uint64_t max_candidates = 1'000'000);

struct Coprimality {
  bool coprime = true;
  std::string common_factor;     // "K2" or "C<m>" when not coprime
  std::optional<Graph> cofactor; // Γ1 with g ≅ Γ1 x common factor
};

/// Requires g connected and n >= 3.
Coprimality is_coprime_with_cycle(const Graph& g, int n);

/// Connected 2-regular graph on >= 3 vertices -> its length.
std::optional<int> cycle_length(const Graph& s);
bool is_k2(const Graph& s);

/// σ maps every layer V(g) x {i} onto a layer.
bool preserves_layers(const ProductGraph& p, const Permutation& sigma);
/// σ = lift(α) lift(δ) with α in Aut(g), δ in Aut(h) (the expected automorphisms).
bool is_product_form(const ProductGraph& p, const Graph& g, const Graph& h, const Permutation& sigma);
/// (u,i)^σ = (u^{α_i}, i^δ); the tuple (α_i) for σ preserving layers.
SigmaAutomorphism layer_tuple(const ProductGraph& p, const Graph& h, const Permutation& sigma);

/// P(g, s), the layer-preserving automorphisms of g x s.
PermutationGroup layer_subgroup(const Graph& g, const Graph& s);
/// Same group by filtering every element of Aut(g x s). Oracle.
std::vector<Permutation> layer_subgroup_by_filter(const Graph& g, const Graph& s, std::uint64_t bound);

/// R(g, C_n) = <lifted Aut(g), lifted Aut(C_n)>.
PermutationGroup expected_subgroup(const Graph& g, int n);

/// An element of P(g, C_n) outside R(g, C_n): the least one when P is small
/// enough to enumerate, otherwise the first such generator.
std::optional<Permutation> find_unexpected_automorphism(const Graph& g, int n,
                                                        std::uint64_t bound = kDefaultBound);
/// A generator of Aut(g x s) that does not preserve the layer partition.
std::optional<Permutation> find_outside_layer_automorphism(const Graph& g, const Graph& s);

enum class VerdictKind { stable, trivially_unstable, nontrivially_unstable, unstable_unclassified };
std::string to_string(VerdictKind k);

struct Reason {
  std::string tag;
  std::string detail;
};

enum class WitnessKind { outside_layer_partition, unexpected_automorphism };
std::string to_string(WitnessKind k);

struct StabilityWitness {
  WitnessKind kind;
  Permutation automorphism;                 // of g x s, not of product form
  std::optional<SigmaAutomorphism> tuple;   // nondiagonal, when the automorphism preserves layers
};

struct StabilityVerdict {
  VerdictKind kind = VerdictKind::stable;
  std::uint64_t aut_g = 0;
  std::uint64_t aut_s = 0;
  std::uint64_t aut_product = 0;
  std::vector<Reason> reasons;
  std::optional<StabilityWitness> witness;

  bool stable() const { return kind == VerdictKind::stable; }
};

StabilityVerdict pair_stability(const Graph& g, const Graph& s);
std::uint64_t product_automorphism_order(const Graph& g, const Graph& s);
bool is_stable_pair(const Graph& g, const Graph& s);

struct AntiAutomorphism {
  Permutation gamma;  // involution in Aut(g)
  Permutation alpha;  // commutes with gamma; {u^α, v^{γα}} ∈ E whenever {u,v} ∈ E
};

bool is_anti_automorphism(const Graph& g, const Permutation& gamma, const Permutation& alpha);
std::optional<AntiAutomorphism> find_anti_automorphism(const Graph& g,
                                                       std::uint64_t bound = kDefaultBound);

bool is_cross_cover_witness(const Graph& g, const Permutation& phi);
std::optional<Permutation> find_cross_cover_witness(const Graph& g,
                                                    std::uint64_t bound = kDefaultBound);

struct InstabilityMechanisms {
  bool unstable = false;
  bool nondiagonal_two_fold = false;
  bool anti_automorphism = false;
  bool cross_cover = false;
  // unstable <=> nondiagonal_two_fold, and each mechanism found implies unstable
  bool consistent = true;
};

/// Requires g R-thin, connected and non-bipartite.
InstabilityMechanisms instability_mechanisms(const Graph& g, std::uint64_t bound = kDefaultBound);

struct FibreActionResult {
  bool applicable = false;  // g R-thin connected, n >= 3, n != 4
  bool non_bipartite_case = false;
  std::uint64_t elements_checked = 0;
  std::vector<std::string> violations;
};

/// Checks the pointwise statements about how automorphisms of g x C_n move
/// fibres over Boolean-square edges, on every element of Aut(g x C_n).
FibreActionResult fibre_action_check(const Graph& g, int n, std::uint64_t bound = kDefaultBound);

}  // namespace pairstab
