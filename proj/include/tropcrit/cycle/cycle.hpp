#pragma once

// Weighted rational polyhedral complexes in R^{n+1}/R·1 (or products of such
// spaces). Cells are stored in chart coordinates, where the lattice
// Z^{n+1}/Z·1 becomes Z^n; see quotient.hpp for the chart.

#include "tropcrit/geometry/errors.hpp"
#include "tropcrit/geometry/int_matrix.hpp"
#include "tropcrit/geometry/polyhedron.hpp"
#include "tropcrit/geometry/quotient.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tropcrit {

struct WeightedCell {
  Polyhedron cell;  // chart coordinates
  Rat weight;

  friend bool operator==(const WeightedCell&, const WeightedCell&) = default;
};

class TropicalCycle {
 public:
  TropicalCycle() = default;
  /// Cells in chart coordinates. Identical cells are merged, zero weights
  /// dropped and the list sorted. Throws StructuralError when a cell is not
  /// of dimension `dim` or lives in the wrong ambient.
  TropicalCycle(std::vector<std::size_t> factors, int dim, std::vector<WeightedCell> cells);

  /// Convenience for a single factor R^{n+1}/R·1.
  static TropicalCycle in_projective(std::size_t n, int dim, std::vector<WeightedCell> cells);

  const std::vector<std::size_t>& factors() const { return factors_; }
  /// Chart dimension (sum of the factors).
  std::size_t ambient_dim() const { return ambient_; }
  /// The projective n of a single-factor cycle; throws on products.
  std::size_t n() const;
  int dim() const { return dim_; }
  const std::vector<WeightedCell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

  friend bool operator==(const TropicalCycle&, const TropicalCycle&) = default;

 private:
  std::vector<std::size_t> factors_;
  std::size_t ambient_ = 0;
  int dim_ = 0;
  std::vector<WeightedCell> cells_;
};

/// A cell read in sum-zero coordinates (blockwise for products).
struct QuotientCell {
  RatMatrix vertices;
  RatMatrix rays;
  RatMatrix lineality;
  Rat weight;
};
std::vector<QuotientCell> quotient_cells(const TropicalCycle& c);
/// Inverse of quotient_cells; inputs may be arbitrary representatives.
TropicalCycle cycle_from_quotient(const std::vector<std::size_t>& factors, int dim,
                                  const std::vector<QuotientCell>& cells);

struct ZeroAtom {
  QuotientVector point;
  Rat multiplicity;
};

class ZeroCycle {
 public:
  ZeroCycle() = default;
  /// Merges equal points and drops zero multiplicities.
  explicit ZeroCycle(std::vector<ZeroAtom> atoms);
  const std::vector<ZeroAtom>& atoms() const { return atoms_; }

 private:
  std::vector<ZeroAtom> atoms_;
};

/// Reads a dimension-0 single-factor cycle as a list of atoms.
ZeroCycle to_zero_cycle(const TropicalCycle& c);
Rat total_mass(const ZeroCycle& z);

/// Weighted sum; ambients must agree.
TropicalCycle add(const TropicalCycle& a, const TropicalCycle& b);
TropicalCycle scale(const TropicalCycle& c, const Rat& factor);

/// Resolves overlapping cells of equal affine span by common refinement,
/// sums weights, drops zeros. The result has no two cells of the same span
/// overlapping in full dimension.
TropicalCycle refine(const TropicalCycle& c);
/// refine, then merge adjacent equal-weight cells whose union is convex.
TropicalCycle normalize(const TropicalCycle& c);
/// Equality as cycles (up to subdivision).
bool equivalent(const TropicalCycle& a, const TropicalCycle& b);

/// Corner locus of min_i a_i.
TropicalCycle standard_hyperplane(std::size_t n);
/// Cones over the images of e_i, i in S, |S| = n-l-1, unit weights.
/// Valid for 0 <= l <= n-1.
TropicalCycle skeleton(std::size_t n, std::size_t l);
/// The fundamental class of the ambient space.
TropicalCycle whole_space(const std::vector<std::size_t>& factors);
/// A single point with the given multiplicity.
TropicalCycle point_cycle(const QuotientVector& p, const Rat& multiplicity = Rat(1));

TropicalCycle translate_cycle(const TropicalCycle& c, const QuotientVector& tau);
/// Translation by a chart vector; works for products.
TropicalCycle translate_chart(const TropicalCycle& c, const RatVector& shift);
TropicalCycle reflect_cycle(const TropicalCycle& c);

/// Product cycle; factors are concatenated.
TropicalCycle cross(const TropicalCycle& a, const TropicalCycle& b);

/// Pushforward along an integer chart matrix (rows = target chart dimension).
/// Cells whose dimension drops are discarded; the others are weighted by the
/// index of the image lattice in its saturation.
TropicalCycle linear_pushforward(const TropicalCycle& c, const IntMatrix& chart_map,
                                 const std::vector<std::size_t>& target_factors);
/// Pushforward along a map given on representatives, Z^{n+1} -> Z^{m+1}.
/// Requires M·1 to be a multiple of 1 so that the map descends.
TropicalCycle linear_pushforward_homogeneous(const TropicalCycle& c, const IntMatrix& M);

/// A ⊞ B (sign +1) or A ⊟ B = closure of {a - b} (sign -1), as the
/// pushforward of A × B along (a, b) ↦ a ± b. Empty when dim A + dim B
/// exceeds the ambient dimension.
TropicalCycle minkowski_convolve(const TropicalCycle& a, const TropicalCycle& b, int sign);

/// Block diagonal embedding of a single-factor cycle into `copies` copies.
TropicalCycle diagonal_pushforward(const TropicalCycle& c, std::size_t copies);

std::string to_string(const TropicalCycle& c);

}  // namespace tropcrit
