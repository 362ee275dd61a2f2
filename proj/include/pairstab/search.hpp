#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pairstab/graph.hpp"
#include "pairstab/permutation.hpp"

namespace pairstab {

struct SearchOptions {
  // Cap on refined search-tree nodes; exceeding it throws BoundExceeded.
  std::uint64_t node_budget = 20'000'000;
};

/// Result of the individualization-refinement automorphism search.
///
/// The search follows one leftmost path (`base`), then, level by level from
/// the bottom up, looks for automorphisms that fix the earlier base points and
/// move the current one. `orbit_sizes[i]` is the orbit of base[i] under the
/// pointwise stabilizer of base[0..i-1]; the group order is their product.
struct AutomorphismSearch {
  PermutationGroup group;
  std::vector<Vertex> base;
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<int> generator_level;  // base level at which each generator was found
  std::uint64_t nodes_visited = 0;
};

/// `colors` (empty, or one entry per vertex) restricts to colour-preserving maps.
AutomorphismSearch search_automorphisms(const Graph& g, std::span<const int> colors = {},
                                        const SearchOptions& options = {});

PermutationGroup automorphism_group(const Graph& g, std::span<const int> colors = {},
                                    const SearchOptions& options = {});

struct CanonicalLabeling {
  std::vector<Vertex> labeling;  // labeling[k] = vertex placed at canonical position k
  Graph form;                    // {k,l} edge iff {labeling[k], labeling[l]} edge
};

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {},
                                     const SearchOptions& options = {});

/// A bijection phi with {u,v} in E(g) iff {phi(u), phi(v)} in E(h), or empty.
std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h,
                                          const SearchOptions& options = {});

/// Plain backtracking over vertex images (no refinement). Slow; used to
/// cross-check the refined search. Elements come back sorted.
std::vector<Permutation> brute_force_automorphisms(const Graph& g, std::uint64_t bound,
                                                   std::span<const int> colors = {});

}  // namespace pairstab
