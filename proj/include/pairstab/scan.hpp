#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pairstab/corpus.hpp"
#include "pairstab/json_io.hpp"

namespace pairstab {

inline constexpr int kReportSchema = 1;

struct ScanOptions {
  std::vector<CorpusEntry> corpus;
  std::string corpus_descriptor;  // e.g. "generated:connected:1..6" or a file path
  int n_min = 3;
  int n_max = 8;
  bool theorems = true;
  bool conjectures = true;
  int jobs = 1;
  bool timing = false;
  std::uint64_t bound = kDefaultBound;
};

/// Runs every applicable check on every (graph, n) instance plus the (graph, K2)
/// pair, which is recorded with n = 2. Records are sorted by (graph id, n), so
/// the report is identical for any `jobs` unless `timing` is set.
Json run_scan(const ScanOptions& options);

/// Reverses the vertex labels; used to re-verify counterexample candidates.
Graph reverse_labels(const Graph& g);

}  // namespace pairstab
