#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pairstab/graph.hpp"

namespace pairstab {

/// One graph6 record, optionally prefixed by ">>graph6<<". Throws InvalidInput
/// on a malformed header, bad characters or a length mismatch.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Every non-empty line of a graph6 file.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);
/// The single graph stored in a file (first record).
Graph read_graph(const std::string& path);

}  // namespace pairstab
