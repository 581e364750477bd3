#pragma once

#include <string>
#include <vector>

#include "gdesc/group.hpp"

namespace gdesc {

/// Nonabelian 1-cocycles of gamma in a, enumerated exhaustively over all
/// |a|^|gamma| maps. The variance matches the engine's descent convention
/// (see docs/conventions.md for the worked derivation):
///   cocycle:    z[t*s] = z[t] * t(z[s])
///   coboundary: z[s] ~ b^-1 * z[s] * s(b)
///   stabilizer: { b : b^-1 * z[s] * s(b) = z[s] for all s }
struct CocycleSet {
  FiniteGroup gamma;
  FiniteGroup a;
  GroupAction action;
  std::vector<std::vector<int>> cocycles;       // each: per gamma element
  std::vector<std::vector<int>> classes;        // partition, cocycle indices
  std::vector<std::vector<int>> stabilizers;    // per class, elements of a
};

/// Throws when |gamma| or |a| exceeds 24 or the search space is oversized.
CocycleSet h1(const GroupAction& action);

struct CohomologyComparison {
  bool ok = false;
  int oracle_classes = 0;
  int descended_classes = 0;
  std::vector<int> oracle_stabilizer_orders;     // sorted
  std::vector<int> descended_automorphism_orders;  // sorted
  std::string detail;
};

/// Cross-validates descend against the oracle on the one-object carrier of
/// a: builds the strict action, the induced datum, descends it, and checks
/// that descended objects biject with cocycles (via the explicit dictionary
/// z[s] = theta_s(phi[s])), classes with classes, and automorphism groups
/// with twisted stabilizers elementwise.
CohomologyComparison compare_with_descent(const GroupAction& action);

}  // namespace gdesc
