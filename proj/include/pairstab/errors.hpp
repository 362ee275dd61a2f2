#pragma once

#include <stdexcept>
#include <string>

namespace pairstab {

// Malformed or out-of-contract input: bad vertex, shape mismatch, invalid file.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A desk-scale cap (group elements, tuples, search nodes) would be exceeded.
// Callers fall back to order-only logic or report the instance as skipped.
class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pairstab
