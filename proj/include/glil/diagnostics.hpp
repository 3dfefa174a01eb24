#pragma once

#include <string>
#include <vector>

#include "glil/relation.hpp"

namespace glil {

struct Violation {
  std::string condition;
  std::vector<World> witness;
  /// Free-form extra context, e.g. the offending axiom instance.
  std::string detail;

  /// "<condition> at (w1,w2,...)" or "<condition> at w" for one witness.
  std::string message() const;
};

struct Diagnostics {
  std::vector<Violation> violations;

  bool clean() const noexcept { return violations.empty(); }
  void add(std::string condition, std::vector<World> witness, std::string detail = {}) {
    violations.push_back({std::move(condition), std::move(witness), std::move(detail)});
  }
  bool has(const std::string& message) const;
};

}  // namespace glil
