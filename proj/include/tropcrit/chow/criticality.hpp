#pragma once

#include "tropcrit/chow/measure.hpp"

#include <optional>
#include <string>

namespace tropcrit {

inline constexpr const char* kChowStabilityCaveat =
    "Chow stability of the input is assumed, not verified; without it the verdict does not decide criticality";

struct CriticalityReport {
  bool critical = false;
  /// Route results: 0 in P_MA by exact LP, and the rank inequalities
  /// δ|S|/(n+1) <= r(S).
  bool lp_route = false;
  bool rank_route = false;
  bool routes_agree = false;

  Polytope p_ma;
  /// Critical: convex coefficients over p_ma.vertices() summing to 0.
  RatVector coefficients;
  /// Not critical: λ (sum-zero, primitive) with <λ, v> > 0 on P_MA, so that
  /// the height derivative along λ is negative; `derivative` is its value.
  std::optional<QuotientVector> lambda;
  std::optional<Rat> derivative;
  /// Not critical: a subset S violating the rank inequality.
  std::optional<Indicator> violated_subset;

  std::string caveat = kChowStabilityCaveat;
};

/// Throws InvariantViolation when the routes disagree.
CriticalityReport is_critical(const MAMeasure& m);

/// Re-checks every certificate in the report with exact arithmetic.
bool verify(const CriticalityReport& r, const MAMeasure& m);

}  // namespace tropcrit
