#pragma once

#include "tropcrit/cycle/cycle.hpp"

#include <cstddef>

namespace tropcrit {

struct IntersectionOptions {
  /// Recompute with a second displacement direction and require equality.
  bool verify = true;
  /// Worker threads for the cell-pair loop; the output does not depend on it.
  std::size_t threads = 1;
};

/// Stable intersection by the fan displacement rule. Displacements come
/// from a fixed sequence of integer vectors; a vector is used only when every
/// meeting pair of cells is generic for it. Throws InvariantViolation when
/// two displacements disagree (which happens only for unbalanced inputs).
/// dim A + dim B < ambient gives the empty 0-dimensional cycle.
TropicalCycle stable_intersection(const TropicalCycle& a, const TropicalCycle& b,
                                  const IntersectionOptions& options = {});

/// Mass of C ·st H^{·dim C}; single-factor cycles only.
Rat degree(const TropicalCycle& c, const IntersectionOptions& options = {});

}  // namespace tropcrit
