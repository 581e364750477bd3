#pragma once

#include <string>
#include <vector>

namespace gdesc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full self-test catalog: the executable theorems (induced data
/// validate, conversion round trips, effectivity, the Z/2 golden pairs, the
/// cohomology cross-check, hom-category comparison), fault-injection
/// sensitivity, and the wall-clock bound. Deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance(unsigned seed = 20260810);

/// True when every criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace gdesc
