#pragma once

#include <array>
#include <span>

#include "pairstab/graph.hpp"
#include "pairstab/permutation.hpp"

namespace pairstab::fixtures {

/// Six-cycle u1..u6 plus the triangle u1u3u5, with u_k stored as vertex k-1.
Graph hexagon_triangle();

/// One row of a product permutation table: (u_from, i_from) -> (u_to, i_to),
/// with u written 1-based as in the vertex names.
struct TableEntry {
  int u_from, i_from, u_to, i_to;
};

/// Explicit automorphism of Γ x C3 that does not preserve the layers.
std::span<const TableEntry> sigma_c3_table();
/// Explicit automorphism of Γ x C6 that does not preserve the layers.
std::span<const TableEntry> tau_c6_table();

/// The table as a permutation of V(Γ x C_n), with (u_k, i) at (k-1)*n + i.
/// Throws InvalidInput unless the table covers every vertex exactly once.
Permutation table_permutation(std::span<const TableEntry> table, int base_order, int n);

}  // namespace pairstab::fixtures
