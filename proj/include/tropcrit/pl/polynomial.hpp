#pragma once

// Tropical polynomials F(a) = min_I (<I, a> + v_I) in the valuation
// convention v_I = -log|a_I|. Exponents are integer vectors of length n+1 and
// may be negative (so -max is expressible).

#include "tropcrit/cycle/cycle.hpp"
#include "tropcrit/geometry/polytope.hpp"

#include <optional>
#include <vector>

namespace tropcrit {

struct Term {
  IntVector exponent;
  Rat valuation;

  friend bool operator==(const Term&, const Term&) = default;
};

class TropicalPolynomial {
 public:
  /// Terms with the same exponent collapse to the smallest valuation; the
  /// list is sorted by exponent. Throws on an empty term list or exponents
  /// of the wrong length.
  TropicalPolynomial(std::size_t n, std::vector<Term> terms);

  std::size_t n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Common coordinate sum of the exponents, if there is one.
  std::optional<Int> degree() const { return degree_; }
  bool is_homogeneous() const { return degree_.has_value(); }

  friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
  std::optional<Int> degree_;
};

/// u(a) = min_i a_i.
TropicalPolynomial standard_min(std::size_t n);
/// min_i (a_i + v_i).
TropicalPolynomial linear_form(const RatVector& valuations);

/// Evaluation at the sum-zero representative. Requires homogeneity.
Rat evaluate(const TropicalPolynomial& f, const QuotientVector& a);
/// Evaluation at an arbitrary vector of R^{n+1}; no homogeneity needed.
Rat evaluate_affine(const TropicalPolynomial& f, const RatVector& a);

/// Exponents attaining the minimum at a.
std::vector<IntVector> active_support(const TropicalPolynomial& f, const QuotientVector& a);
/// Hull of the active exponents, as a quotient polytope.
Polytope sup_differential(const TropicalPolynomial& f, const QuotientVector& a);

struct RoofEntry {
  IntVector exponent;
  Rat valuation;
  Rat roof;     // value of the lower hull of {(I, v_I)} at I
  bool active;  // valuation == roof
};

struct Roof {
  Polytope newton;  // hull of the exponents in Q^{n+1}
  std::vector<RoofEntry> entries;
};

Roof newton_roof(const TropicalPolynomial& f);

/// Hull of the exponents of minimal valuation: sup_differential(f, 0).
Polytope residual_polytope(const TropicalPolynomial& f);
/// 0 in the residual polytope.
bool torus_minimal(const TropicalPolynomial& f);

/// Codimension-one cells where the minimum is attained at least twice,
/// weighted by the lattice length of the dual Newton edge.
TropicalCycle corner_locus(const TropicalPolynomial& f);

/// a ↦ f(a - tau).
TropicalPolynomial translate(const TropicalPolynomial& f, const QuotientVector& tau);
/// Pointwise c·f for c >= 0; c·I must be integral for every exponent.
TropicalPolynomial scale(const TropicalPolynomial& f, const Rat& c);
/// Pointwise f + g (tropical product).
TropicalPolynomial sum(const TropicalPolynomial& f, const TropicalPolynomial& g);

/// -min_I v_I.
Rat chow_norm_log(const TropicalPolynomial& f);

struct ConfigPoint {
  RatVector valuations;  // n+1 entries
  Rat multiplicity;      // > 0
  friend bool operator==(const ConfigPoint&, const ConfigPoint&) = default;
};

struct PointConfiguration {
  std::size_t n = 0;
  std::vector<ConfigPoint> points;
  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;
};

/// Throws std::invalid_argument unless every point has n+1 valuations and
/// a positive multiplicity, and there is at least one point.
void validate(const PointConfiguration& c);

struct ChowPolynomial {
  TropicalPolynomial polynomial;
  /// polynomial = scale · Σ_a m_a min_i(v_{a,i} + τ_i); the least common
  /// denominator of the multiplicities.
  Int scale;
};

ChowPolynomial point_config_chow(const PointConfiguration& c);

std::string to_string(const TropicalPolynomial& f);

}  // namespace tropcrit
