#include "tropcrit/geometry/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropcrit {

namespace {

FeasibilityResult combination_lp(const std::vector<RatVector>& points, const RatVector& x) {
  const std::size_t k = x.size();
  RatMatrix A(k + 1, RatVector(points.size(), Rat(0)));
  RatVector b(k + 1);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < points.size(); ++i) A[c][i] = points[i][c];
    b[c] = x[c];
  }
  for (std::size_t i = 0; i < points.size(); ++i) A[k][i] = 1;
  b[k] = 1;
  return solve_feasibility(A, b, points.size());
}

void check_length(const RatVector& v, std::size_t coordinates) {
  if (v.size() != coordinates)
    throw std::invalid_argument("polytope: point " + to_string(v) + " does not have " +
                                std::to_string(coordinates) + " coordinates");
}

RatVector prepare(const Polytope& p, const RatVector& x) {
  check_length(x, p.coordinates());
  return p.is_quotient() ? canonical_rep(x).coords() : x;
}

}  // namespace

Polytope::Polytope(std::size_t coordinates, bool quotient)
    : coordinates_(coordinates), quotient_(quotient) {}

int Polytope::dimension() const {
  if (vertices_.empty()) return -1;
  RatMatrix diffs;
  for (std::size_t i = 1; i < vertices_.size(); ++i) diffs.push_back(sub(vertices_[i], vertices_[0]));
  return static_cast<int>(rank(diffs, coordinates_));
}

Polytope convex_hull(const std::vector<RatVector>& points, std::size_t coordinates, bool quotient) {
  Polytope out(coordinates, quotient);
  std::vector<RatVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) {
    check_length(p, coordinates);
    pts.push_back(quotient ? canonical_rep(p).coords() : p);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Drop points lying in the hull of the remaining ones; removing a redundant
  // point never changes the hull, so one sweep suffices.
  std::vector<bool> keep(pts.size(), true);
  if (pts.size() > 2) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<RatVector> others;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (j != i && keep[j]) others.push_back(pts[j]);
      if (combination_lp(others, pts[i]).feasible) keep[i] = false;
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (keep[i]) out.vertices_.push_back(std::move(pts[i]));
  return out;
}

Polytope convex_hull(const std::vector<QuotientVector>& points, std::size_t n) {
  std::vector<RatVector> raw;
  raw.reserve(points.size());
  for (const auto& p : points) raw.push_back(p.coords());
  return convex_hull(raw, n + 1, true);
}

Polytope simplex(std::size_t n, const std::vector<std::size_t>& indices) {
  std::vector<RatVector> pts;
  for (auto i : indices) {
    if (i > n) throw std::invalid_argument("simplex: index out of range");
    pts.push_back(unit_vector(n + 1, i));
  }
  return convex_hull(pts, n + 1, true);
}

Polytope point_polytope(const QuotientVector& p) { return convex_hull({p.coords()}, p.n() + 1, true); }

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.coordinates() != q.coordinates() || p.is_quotient() != q.is_quotient())
    throw std::invalid_argument("minkowski_sum: ambient mismatch");
  if (p.empty() || q.empty()) return Polytope(p.coordinates(), p.is_quotient());
  std::vector<RatVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  return convex_hull(sums, p.coordinates(), p.is_quotient());
}

Polytope dilate(const Polytope& p, const Rat& factor) {
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(scaled(v, factor));
  return convex_hull(pts, p.coordinates(), p.is_quotient());
}

Polytope reflect(const Polytope& p) { return dilate(p, Rat(-1)); }

Polytope translate(const Polytope& p, const RatVector& shift) {
  check_length(shift, p.coordinates());
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(add(v, shift));
  return convex_hull(pts, p.coordinates(), p.is_quotient());
}

MembershipCertificate membership(const Polytope& p, const RatVector& x) {
  const RatVector target = prepare(p, x);
  MembershipCertificate cert;
  if (p.empty()) return cert;
  const FeasibilityResult r = combination_lp(p.vertices(), target);
  if (r.feasible) {
    cert.member = true;
    cert.coefficients = r.solution;
    return cert;
  }
  // Farkas (y, s): y·v + s >= 0 > y·x + s, so y strictly separates x.
  RatVector y(r.farkas.begin(), r.farkas.end() - 1);
  if (p.is_quotient()) y = canonical_rep(y).coords();
  cert.separator = primitive_direction(y);
  return cert;
}

bool verify_membership(const Polytope& p, const RatVector& x, const MembershipCertificate& c) {
  const RatVector target = prepare(p, x);
  if (c.member) {
    if (c.coefficients.size() != p.vertices().size()) return false;
    Rat total = 0;
    RatVector combo = zeros(p.coordinates());
    for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
      if (c.coefficients[i] < 0) return false;
      total += c.coefficients[i];
      combo = add(combo, scaled(p.vertices()[i], c.coefficients[i]));
    }
    return total == 1 && combo == target;
  }
  if (p.empty()) return c.separator.empty();
  if (c.separator.size() != p.coordinates()) return false;
  const Rat level = dot(c.separator, target);
  for (const auto& v : p.vertices())
    if (dot(c.separator, v) <= level) return false;
  return true;
}

bool contains(const Polytope& p, const RatVector& x) { return membership(p, x).member; }

bool contains(const Polytope& p, const QuotientVector& x) { return contains(p, x.coords()); }

Rat support_value(const Polytope& p, const RatVector& dir) {
  if (p.empty()) throw std::invalid_argument("support_value: empty polytope");
  check_length(dir, p.coordinates());
  Rat best = dot(dir, p.vertices().front());
  for (const auto& v : p.vertices()) best = std::max(best, dot(dir, v));
  return best;
}

Rat support_value(const Polytope& p, const QuotientVector& dir) { return support_value(p, dir.coords()); }

}  // namespace tropcrit
