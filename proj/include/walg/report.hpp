#pragma once

#include <string>
#include <vector>

namespace walg {

// outcome of an exhaustive axiom check: one entry per violated instance
struct CheckReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

}  // namespace walg
