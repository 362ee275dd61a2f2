#pragma once

#include <string>
#include <vector>

#include "pairstab/graph.hpp"

namespace pairstab {

struct CorpusEntry {
  std::string id;  // graph6 of the canonical form
  Graph graph;     // the canonical form itself
};

/// Isomorphism-invariant identifier: graph6 of the canonical form.
std::string canonical_id(const Graph& g);

/// One representative of every isomorphism class on min_order..max_order
/// vertices, sorted by (order, id). Built by extending each class on n-1
/// vertices with every neighbour set and keeping new canonical forms.
std::vector<CorpusEntry> generate_graphs(int min_order, int max_order, bool connected_only);

/// Canonicalises and deduplicates external graphs into the same sorted shape.
std::vector<CorpusEntry> make_corpus(const std::vector<Graph>& graphs);

}  // namespace pairstab
