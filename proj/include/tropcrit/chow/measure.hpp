#pragma once

#include "tropcrit/cycle/intersection.hpp"
#include "tropcrit/geometry/polytope.hpp"

#include <cstdint>
#include <vector>

namespace tropcrit {

using Indicator = std::vector<std::size_t>;  // sorted, nonempty subset of {0..n}

/// Indices where the coordinates of a attain their minimum.
Indicator argmin_set(const QuotientVector& a);

struct MAAtom {
  QuotientVector point;
  Rat mass;
  Indicator indicator;
  friend bool operator==(const MAAtom&, const MAAtom&) = default;
};

class MAMeasure {
 public:
  /// Atoms at equal points merge. Throws std::invalid_argument on a
  /// nonpositive mass, a point of the wrong ambient, or an indicator that is
  /// not the argmin set of its point.
  MAMeasure(std::size_t n, std::size_t dim, std::vector<MAAtom> atoms);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::vector<MAAtom>& atoms() const { return atoms_; }
  Rat total_mass() const;
  friend bool operator==(const MAMeasure&, const MAMeasure&) = default;

 private:
  std::size_t n_;
  std::size_t dim_;
  std::vector<MAAtom> atoms_;
};

/// A point whose argmin set is exactly `indicator` (0 on it, 1 elsewhere).
QuotientVector indicator_point(std::size_t n, const Indicator& indicator);

/// X ·st H^{·d} read as atoms, d = dim X <= n-1. Throws on unbalanced input.
MAMeasure ma_measure(const TropicalCycle& x, const IntersectionOptions& options = {});

/// max_{i in I} -λ_i.
Rat bergman_value(const Indicator& indicator, const QuotientVector& lambda);

/// Set function on subsets of {0..n}, indexed by bit mask.
class Polymatroid {
 public:
  Polymatroid(std::size_t ground, std::vector<Rat> rank);
  std::size_t ground() const { return ground_; }
  const Rat& rank(std::uint32_t mask) const { return rank_[mask]; }
  const std::vector<Rat>& ranks() const { return rank_; }
  const Rat& total() const { return rank_.back(); }
  bool is_normalized() const { return rank_.front().is_zero(); }
  bool is_monotone() const;
  bool is_submodular() const;
  /// Greedy vertices of the base polytope, one per ordering, deduplicated.
  std::vector<RatVector> greedy_vertices() const;

 private:
  std::size_t ground_;
  std::vector<Rat> rank_;
};

struct MAPolytope {
  Polytope polytope;  // Σ μ_a Δ_{I(a)} in quotient coordinates
  Polymatroid polymatroid;
};

/// Also checks that the Minkowski sum equals the projected base polytope of
/// the rank function (InvariantViolation otherwise).
MAPolytope ma_polytope(const MAMeasure& m);

/// (d+1) Σ_a μ_a b(I(a), λ). The version taking P_MA also checks the value
/// against (d+1)·support_value(P_MA, -λ).
Rat height_derivative(const MAMeasure& m, const QuotientVector& lambda);
Rat height_derivative(const MAMeasure& m, const QuotientVector& lambda, const Polytope& p_ma);

std::string to_string(const Indicator& indicator);

}  // namespace tropcrit
