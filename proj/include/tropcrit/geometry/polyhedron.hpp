#pragma once

// Rational polyhedra carried in both representations. Conversions use the
// double description method on the homogenized cone; desk-scale ambient
// dimensions (<= 16) keep this cheap.

#include "tropcrit/geometry/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tropcrit {

/// normal·x >= offset
struct Inequality {
  RatVector normal;
  Rat offset;
};

/// normal·x == offset
struct Equation {
  RatVector normal;
  Rat offset;
};

struct ConeGenerators {
  RatMatrix lineality;
  RatMatrix rays;
};

/// Generators of { x in R^d : a·x >= 0 for every row a }. Rays are
/// primitive integer vectors and irredundant modulo the lineality space.
ConeGenerators double_description(std::size_t d, const RatMatrix& constraints);

class Polyhedron {
 public:
  /// The empty subset of R^0.
  Polyhedron() = default;

  static Polyhedron from_generators(std::size_t ambient, const RatMatrix& points,
                                    const RatMatrix& rays, const RatMatrix& lineality);
  static Polyhedron from_constraints(std::size_t ambient, const std::vector<Inequality>& inequalities,
                                     const std::vector<Equation>& equations);
  static Polyhedron empty_set(std::size_t ambient);
  static Polyhedron whole_space(std::size_t ambient);
  static Polyhedron point(const RatVector& p);
  /// Cone spanned by `rays` with apex `apex`.
  static Polyhedron cone(const RatVector& apex, const RatMatrix& rays);

  std::size_t ambient() const { return ambient_; }
  /// -1 when empty.
  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }

  /// Canonical V-representation: lineality in reduced row echelon form,
  /// points (one per minimal face) and primitive rays reduced modulo the
  /// lineality space, both sorted.
  const RatMatrix& points() const { return points_; }
  const RatMatrix& rays() const { return rays_; }
  const RatMatrix& lineality() const { return lineality_; }

  /// Irredundant H-representation; `equations` span the affine hull.
  const std::vector<Inequality>& inequalities() const { return inequalities_; }
  const std::vector<Equation>& equations() const { return equations_; }

  /// Reduced row echelon basis of the linear space parallel to the affine hull.
  const RowEchelon& direction_space() const { return directions_; }
  bool is_bounded() const { return rays_.empty() && lineality_.empty(); }

  /// A point of the relative interior (mean of points plus sum of rays).
  RatVector relative_interior_point() const;

  bool contains(const RatVector& x) const;
  bool contains(const Polyhedron& other) const;
  /// True when x is in the polyhedron but on no facet.
  bool contains_in_relative_interior(const RatVector& x) const;

  std::vector<Polyhedron> facets() const;
  Polyhedron intersect(const Polyhedron& other) const;
  /// Intersection with a halfspace / hyperplane.
  Polyhedron intersect(const Inequality& h) const;
  Polyhedron intersect(const Equation& h) const;

  /// Image under x ↦ M x; `target` is the number of rows of M.
  Polyhedron image(const RatMatrix& M, std::size_t target) const;
  Polyhedron translate(const RatVector& shift) const;
  Polyhedron negate() const;
  Polyhedron product(const Polyhedron& other) const;
  Polyhedron minkowski_sum(const Polyhedron& other) const;

  friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
    return a.ambient_ == b.ambient_ && a.dim_ == b.dim_ && a.points_ == b.points_ &&
           a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }
  friend bool operator<(const Polyhedron& a, const Polyhedron& b);

 private:
  static Polyhedron from_constraints_only(std::size_t ambient, const std::vector<Inequality>& inequalities,
                                          const std::vector<Equation>& equations);
  static ConeGenerators polar_cone(std::size_t ambient, const RatMatrix& points, const RatMatrix& rays,
                                   const RatMatrix& lineality);
  void set_constraints_from_polar(const ConeGenerators& dual);
  void finish_from_cone(const ConeGenerators& homogenized);
  void compute_directions();

  std::size_t ambient_ = 0;
  int dim_ = -1;
  RatMatrix points_;
  RatMatrix rays_;
  RatMatrix lineality_;
  std::vector<Inequality> inequalities_;
  std::vector<Equation> equations_;
  RowEchelon directions_;
};

std::string to_string(const Polyhedron& p);

}  // namespace tropcrit
