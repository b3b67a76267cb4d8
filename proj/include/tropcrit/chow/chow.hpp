#pragma once

#include "tropcrit/chow/criticality.hpp"
#include "tropcrit/pl/polynomial.hpp"

#include <string>

namespace tropcrit {

/// X ⊟ H^{·(d+1)} on the diagonal; needs d+1 <= n.
TropicalCycle chow_hypersurface(const TropicalCycle& x);
/// Δ_* X ⊟ (H × ... × H), d+1 factors; needs n(d+1) <= 8.
TropicalCycle chow_multi(const TropicalCycle& x);

/// Σ_{p in X ·st (H^{·d} + τ)} m_p · u(p - τ).
Rat chow_green_eval(const TropicalCycle& x, const QuotientVector& tau, const IntersectionOptions& options = {});

/// reflect((d+1)·P_MA).
Polytope residual_chow_polytope(const MAMeasure& m);

/// Measure of a point configuration: atoms at the points, masses the
/// multiplicities, indicators the argmin valuations.
MAMeasure config_measure(const PointConfiguration& c);

struct D0Report {
  Int scale;                 // common denominator of the multiplicities
  Polytope residual;         // residual polytope of the Chow polynomial
  Polytope ma;               // P_MA of the configuration measure
  bool polytopes_equal = false;  // residual == scale·P_MA
  bool torus_minimal = false;
  CriticalityReport criticality;
  bool verdicts_equal = false;
  bool consistent() const { return polytopes_equal && verdicts_equal; }
  /// Human-readable description of any mismatch; empty when consistent.
  std::string diff;
};

D0Report d0_crosscheck(const PointConfiguration& c);

}  // namespace tropcrit
