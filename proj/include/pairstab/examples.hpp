#pragma once

#include <string>
#include <vector>

namespace pairstab {

struct ExampleCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Reproduces the worked examples on the hexagon-triangle graph, in a fixed
/// order. Never throws; an exception inside a check becomes a failed entry.
std::vector<ExampleCheck> verify_worked_examples();

}  // namespace pairstab
