#pragma once

// Exact feasibility of { x : A x = b, x >= 0 } by a phase-one tableau simplex
// with Bland's rule. Every answer comes with a certificate that can be
// re-checked with plain rational arithmetic.

#include "tropcrit/geometry/linalg.hpp"

namespace tropcrit {

struct FeasibilityResult {
  bool feasible = false;
  /// A nonnegative solution of A x = b when feasible.
  RatVector solution;
  /// When infeasible: z with A^T z >= 0 componentwise and b·z < 0.
  RatVector farkas;
};

FeasibilityResult solve_feasibility(const RatMatrix& A, const RatVector& b, std::size_t cols);

bool verify_feasibility(const RatMatrix& A, const RatVector& b, const FeasibilityResult& r);

}  // namespace tropcrit
