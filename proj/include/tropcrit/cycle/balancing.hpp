#pragma once

#include "tropcrit/cycle/cycle.hpp"

#include <optional>

namespace tropcrit {

struct BalanceReport {
  bool balanced = true;
  /// On failure: a codimension-one piece where balancing fails, and the
  /// weighted sum of primitive normals reduced modulo its span. Both in
  /// chart coordinates; `defect_quotient` is the sum-zero reading.
  std::optional<Polyhedron> face;
  RatVector defect;
  RatVector defect_quotient;
};

/// Throws StructuralError when two cells of the same affine span overlap
/// without being equal (the input is then not a complex).
BalanceReport is_balanced(const TropicalCycle& c);

/// Lattice normal of `cell` relative to its facet `facet`: primitive in
/// the saturated lattice of the cell modulo that of the facet, pointing
/// into the cell.
RatVector primitive_normal(const Polyhedron& cell, const Polyhedron& facet);

}  // namespace tropcrit
