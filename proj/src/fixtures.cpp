#include "pairstab/fixtures.hpp"

#include "pairstab/errors.hpp"

namespace pairstab::fixtures {

namespace {

constexpr std::array<TableEntry, 18> kSigma{{
    {1, 0, 1, 1}, {2, 0, 4, 2}, {3, 0, 1, 0}, {4, 0, 4, 1}, {5, 0, 1, 2}, {6, 0, 4, 0},
    {1, 1, 3, 1}, {2, 1, 6, 2}, {3, 1, 3, 0}, {4, 1, 6, 1}, {5, 1, 3, 2}, {6, 1, 6, 0},
    {1, 2, 5, 1}, {2, 2, 2, 2}, {3, 2, 5, 0}, {4, 2, 2, 1}, {5, 2, 5, 2}, {6, 2, 2, 0},
}};

constexpr std::array<TableEntry, 36> kTau{{
    {1, 0, 1, 1}, {2, 0, 4, 5}, {3, 0, 1, 3}, {4, 0, 4, 1}, {5, 0, 1, 5}, {6, 0, 4, 3},
    {1, 1, 5, 4}, {2, 1, 2, 2}, {3, 1, 5, 0}, {4, 1, 2, 4}, {5, 1, 5, 2}, {6, 1, 2, 0},
    {1, 2, 3, 1}, {2, 2, 6, 5}, {3, 2, 3, 3}, {4, 2, 6, 1}, {5, 2, 3, 5}, {6, 2, 6, 3},
    {1, 3, 1, 4}, {2, 3, 4, 2}, {3, 3, 1, 0}, {4, 3, 4, 4}, {5, 3, 1, 2}, {6, 3, 4, 0},
    {1, 4, 5, 1}, {2, 4, 2, 5}, {3, 4, 5, 3}, {4, 4, 2, 1}, {5, 4, 5, 5}, {6, 4, 2, 3},
    {1, 5, 3, 4}, {2, 5, 6, 2}, {3, 5, 3, 0}, {4, 5, 6, 4}, {5, 5, 3, 2}, {6, 5, 6, 0},
}};

}  // namespace

Graph hexagon_triangle() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {2, 4}, {0, 4}});
}

std::span<const TableEntry> sigma_c3_table() { return kSigma; }
std::span<const TableEntry> tau_c6_table() { return kTau; }

Permutation table_permutation(std::span<const TableEntry> table, int base_order, int n) {
  const std::size_t size = static_cast<std::size_t>(base_order) * static_cast<std::size_t>(n);
  if (table.size() != size) throw InvalidInput("table does not cover the product");
  std::vector<Vertex> image(size, -1);
  auto index = [&](int u, int i) {
    if (u < 1 || u > base_order || i < 0 || i >= n) throw InvalidInput("table entry out of range");
    return (u - 1) * n + i;
  };
  for (const TableEntry& e : table) {
    const int from = index(e.u_from, e.i_from);
    if (image[from] >= 0) throw InvalidInput("table lists a vertex twice");
    image[from] = index(e.u_to, e.i_to);
  }
  return Permutation(std::move(image));
}

}  // namespace pairstab::fixtures
