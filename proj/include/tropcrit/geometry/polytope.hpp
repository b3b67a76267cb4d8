#pragma once

#include "tropcrit/geometry/lp.hpp"
#include "tropcrit/geometry/quotient.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tropcrit {

/// Bounded polytope kept as its irredundant, lexicographically sorted vertex
/// list. Quotient polytopes live in R^{n+1}/R·1 and store sum-zero
/// representatives; plain ones are ordinary point sets in Q^k.
class Polytope {
 public:
  /// The empty polytope with `coordinates` entries per point.
  explicit Polytope(std::size_t coordinates = 0, bool quotient = false);

  const std::vector<RatVector>& vertices() const { return vertices_; }
  std::size_t coordinates() const { return coordinates_; }
  bool is_quotient() const { return quotient_; }
  bool empty() const { return vertices_.empty(); }
  /// Affine dimension; -1 for the empty polytope.
  int dimension() const;

  bool operator==(const Polytope& o) const = default;

 private:
  friend Polytope convex_hull(const std::vector<RatVector>& points, std::size_t coordinates,
                              bool quotient);
  std::size_t coordinates_ = 0;
  bool quotient_ = false;
  std::vector<RatVector> vertices_;
};

/// Irredundant hull; quotient inputs are canonicalized first. Throws
/// std::invalid_argument on points of the wrong length.
Polytope convex_hull(const std::vector<RatVector>& points, std::size_t coordinates,
                     bool quotient = false);
Polytope convex_hull(const std::vector<QuotientVector>& points, std::size_t n);

/// Quotient simplex spanned by the images of e_i, i in `indices`.
Polytope simplex(std::size_t n, const std::vector<std::size_t>& indices);
Polytope point_polytope(const QuotientVector& p);

/// Empty is absorbing. Throws on ambient mismatch.
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope dilate(const Polytope& p, const Rat& factor);
Polytope reflect(const Polytope& p);
Polytope translate(const Polytope& p, const RatVector& shift);

bool contains(const Polytope& p, const RatVector& x);
bool contains(const Polytope& p, const QuotientVector& x);

/// Coefficients λ >= 0, Σλ = 1, Σ λ_i v_i = x over the vertex list, or the
/// separating functional y with y·v > y·x for every vertex when x ∉ P.
struct MembershipCertificate {
  bool member = false;
  RatVector coefficients;
  RatVector separator;
};
MembershipCertificate membership(const Polytope& p, const RatVector& x);
bool verify_membership(const Polytope& p, const RatVector& x, const MembershipCertificate& c);

/// max over vertices of <dir, v>. Throws on the empty polytope.
Rat support_value(const Polytope& p, const RatVector& dir);
Rat support_value(const Polytope& p, const QuotientVector& dir);

}  // namespace tropcrit
