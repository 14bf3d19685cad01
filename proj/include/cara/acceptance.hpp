#pragma once

// The ten acceptance criteria as callable checks, shared by the suite runner
// and the acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

namespace cara {

inline constexpr int kCriterionCount = 10;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

/// Throws std::out_of_range for ids outside 1..kCriterionCount.
CriterionResult run_criterion(int id, std::uint64_t seed = 42);

}  // namespace cara
