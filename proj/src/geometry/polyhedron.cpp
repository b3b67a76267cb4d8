#include "tropcrit/geometry/polyhedron.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <stdexcept>

namespace tropcrit {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  RatVector v;
  Bits tight;
};

RatVector normalized(const RatVector& v) { return primitive_direction(v); }

void check_rows(const RatMatrix& m, std::size_t d, const char* what) {
  for (const auto& r : m)
    if (r.size() != d) throw std::invalid_argument(std::string("polyhedron: ") + what + " of wrong length");
}

}  // namespace

ConeGenerators double_description(std::size_t d, const RatMatrix& constraints) {
  check_rows(constraints, d, "constraint");
  const std::size_t m = constraints.size();
  RatMatrix lin;
  for (std::size_t i = 0; i < d; ++i) lin.push_back(unit_vector(d, i));
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const RatVector& a = constraints[k];
    std::size_t pick = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (!dot(a, lin[i]).is_zero()) {
        pick = i;
        break;
      }

    if (pick < lin.size()) {
      RatVector l0 = lin[pick];
      Rat s = dot(a, l0);
      if (s < 0) {
        l0 = negated(l0);
        s = -s;
      }
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(pick));
      for (auto& l : lin) {
        const Rat t = dot(a, l);
        if (!t.is_zero()) l = normalized(sub(l, scaled(l0, t / s)));
      }
      for (auto& r : rays) {
        const Rat t = dot(a, r.v);
        if (!t.is_zero()) r.v = normalized(sub(r.v, scaled(l0, t / s)));
        r.tight.resize(m);
        r.tight.set(k);
      }
      Ray fresh{normalized(l0), Bits(m)};
      for (std::size_t j = 0; j < k; ++j) fresh.tight.set(j);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Rat> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      Ray r = rays[i];
      if (val[i].is_zero()) r.tight.set(k);
      next.push_back(std::move(r));
    }
    const std::size_t cone_dim = d - lin.size();
    for (auto p : pos) {
      for (auto q : neg) {
        const Bits common = rays[p].tight & rays[q].tight;
        if (cone_dim >= 2 && common.count() + 2 < cone_dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.is_subset_of(rays[r].tight)) adjacent = false;
        if (!adjacent) continue;
        Ray fresh{normalized(add(scaled(rays[q].v, val[p]), scaled(rays[p].v, -val[q]))), common};
        fresh.tight.set(k);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  const RowEchelon L = rref(lin, d);
  out.lineality = L.rows;
  for (auto& r : rays) out.rays.push_back(normalized(reduce_modulo(r.v, L)));
  return out;
}

Polyhedron Polyhedron::empty_set(std::size_t ambient) {
  Polyhedron p;
  p.ambient_ = ambient;
  p.dim_ = -1;
  RatVector zero = zeros(ambient);
  // 0 >= 1 is the canonical infeasible system.
  p.inequalities_.push_back({zero, Rat(1)});
  p.directions_ = rref({}, ambient);
  return p;
}

Polyhedron Polyhedron::whole_space(std::size_t ambient) {
  RatMatrix lin;
  for (std::size_t i = 0; i < ambient; ++i) lin.push_back(unit_vector(ambient, i));
  return from_generators(ambient, {zeros(ambient)}, {}, lin);
}

Polyhedron Polyhedron::point(const RatVector& p) { return from_generators(p.size(), {p}, {}, {}); }

Polyhedron Polyhedron::cone(const RatVector& apex, const RatMatrix& rays) {
  return from_generators(apex.size(), {apex}, rays, {});
}

Polyhedron Polyhedron::from_generators(std::size_t ambient, const RatMatrix& points, const RatMatrix& rays,
                                       const RatMatrix& lineality) {
  check_rows(points, ambient, "point");
  check_rows(rays, ambient, "ray");
  check_rows(lineality, ambient, "lineality vector");
  if (points.empty()) return empty_set(ambient);
  // Extreme rays of the polar cone are facets even for redundant generators;
  // a second pass then yields the canonical generators.
  Polyhedron h;
  h.ambient_ = ambient;
  h.set_constraints_from_polar(polar_cone(ambient, points, rays, lineality));
  Polyhedron out = from_constraints_only(ambient, h.inequalities_, h.equations_);
  out.inequalities_ = std::move(h.inequalities_);
  out.equations_ = std::move(h.equations_);
  return out;
}

Polyhedron Polyhedron::from_constraints_only(std::size_t ambient, const std::vector<Inequality>& inequalities,
                                             const std::vector<Equation>& equations) {
  RatMatrix rows;
  RatVector t_row = zeros(ambient + 1);
  t_row.back() = 1;
  rows.push_back(t_row);
  for (const auto& e : equations) {
    if (e.normal.size() != ambient) throw std::invalid_argument("polyhedron: equation of wrong length");
    RatVector r = e.normal;
    r.push_back(-e.offset);
    rows.push_back(r);
    rows.push_back(negated(r));
  }
  for (const auto& h : inequalities) {
    if (h.normal.size() != ambient) throw std::invalid_argument("polyhedron: inequality of wrong length");
    RatVector r = h.normal;
    r.push_back(-h.offset);
    rows.push_back(std::move(r));
  }
  Polyhedron out;
  out.ambient_ = ambient;
  out.finish_from_cone(double_description(ambient + 1, rows));
  return out;
}

Polyhedron Polyhedron::from_constraints(std::size_t ambient, const std::vector<Inequality>& inequalities,
                                        const std::vector<Equation>& equations) {
  Polyhedron out = from_constraints_only(ambient, inequalities, equations);
  if (!out.is_empty()) out.set_constraints_from_polar(polar_cone(ambient, out.points_, out.rays_, out.lineality_));
  return out;
}

void Polyhedron::finish_from_cone(const ConeGenerators& homogenized) {
  const std::size_t D = ambient_;
  RatMatrix lin;
  for (const auto& l : homogenized.lineality) lin.emplace_back(l.begin(), l.end() - 1);
  RatMatrix pts, rys;
  for (const auto& r : homogenized.rays) {
    RatVector x(r.begin(), r.end() - 1);
    if (r.back() > 0) pts.push_back(scaled(x, 1 / r.back()));
    else rys.push_back(std::move(x));
  }
  if (pts.empty()) {
    *this = empty_set(D);
    return;
  }
  const RowEchelon L = rref(lin, D);
  lineality_ = L.rows;
  for (auto& p : pts) p = reduce_modulo(p, L);
  for (auto& r : rys) {
    r = primitive_direction(reduce_modulo(r, L));
  }
  rys.erase(std::remove_if(rys.begin(), rys.end(), [](const RatVector& r) { return is_zero(r); }), rys.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::sort(rys.begin(), rys.end());
  rys.erase(std::unique(rys.begin(), rys.end()), rys.end());
  points_ = std::move(pts);
  rays_ = std::move(rys);
  compute_directions();
}

void Polyhedron::compute_directions() {
  RatMatrix dirs = lineality_;
  for (const auto& r : rays_) dirs.push_back(r);
  for (std::size_t i = 1; i < points_.size(); ++i) dirs.push_back(sub(points_[i], points_[0]));
  directions_ = rref(dirs, ambient_);
  dim_ = static_cast<int>(directions_.rows.size());
}

ConeGenerators Polyhedron::polar_cone(std::size_t ambient, const RatMatrix& points, const RatMatrix& rays,
                                      const RatMatrix& lineality) {
  RatMatrix polar;
  auto lift = [](const RatVector& v, long last) {
    RatVector g = v;
    g.push_back(Rat(last));
    return g;
  };
  for (const auto& p : points) polar.push_back(lift(p, 1));
  for (const auto& r : rays) polar.push_back(lift(r, 0));
  for (const auto& l : lineality) {
    polar.push_back(lift(l, 0));
    polar.push_back(negated(lift(l, 0)));
  }
  return double_description(ambient + 1, polar);
}

void Polyhedron::set_constraints_from_polar(const ConeGenerators& dual) {
  equations_.clear();
  inequalities_.clear();
  // (a, c) in the polar means a·x + c >= 0; a = 0 is the trivial t >= 0.
  for (const auto& y : dual.lineality) {
    RatVector a(y.begin(), y.end() - 1);
    if (!is_zero(a)) equations_.push_back({a, Rat(-y.back())});
  }
  for (const auto& y : dual.rays) {
    RatVector a(y.begin(), y.end() - 1);
    if (!is_zero(a)) inequalities_.push_back({a, Rat(-y.back())});
  }
}

RatVector Polyhedron::relative_interior_point() const {
  if (is_empty()) throw std::invalid_argument("relative_interior_point: empty polyhedron");
  RatVector c = zeros(ambient_);
  for (const auto& p : points_) c = add(c, p);
  c = scaled(c, Rat(1) / Rat(static_cast<long>(points_.size())));
  for (const auto& r : rays_) c = add(c, r);
  return c;
}

bool Polyhedron::contains(const RatVector& x) const {
  if (x.size() != ambient_) throw std::invalid_argument("polyhedron: point of wrong length");
  if (is_empty()) return false;
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& h : inequalities_)
    if (dot(h.normal, x) < h.offset) return false;
  return true;
}

bool Polyhedron::contains_in_relative_interior(const RatVector& x) const {
  if (!contains(x)) return false;
  for (const auto& h : inequalities_)
    if (dot(h.normal, x) == h.offset) return false;
  return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("polyhedron: ambient mismatch");
  if (other.is_empty()) return true;
  if (is_empty()) return false;
  for (const auto& p : other.points_)
    if (!contains(p)) return false;
  auto direction_ok = [&](const RatVector& r, bool both) {
    for (const auto& e : equations_)
      if (!dot(e.normal, r).is_zero()) return false;
    for (const auto& h : inequalities_) {
      const Rat t = dot(h.normal, r);
      if (t < 0 || (both && t > 0)) return false;
    }
    return true;
  };
  for (const auto& r : other.rays_)
    if (!direction_ok(r, false)) return false;
  for (const auto& l : other.lineality_)
    if (!direction_ok(l, true)) return false;
  return true;
}

std::vector<Polyhedron> Polyhedron::facets() const {
  std::vector<Polyhedron> out;
  if (is_empty()) return out;
  for (const auto& h : inequalities_) {
    RatMatrix pts, rys;
    for (const auto& p : points_)
      if (dot(h.normal, p) == h.offset) pts.push_back(p);
    for (const auto& r : rays_)
      if (dot(h.normal, r).is_zero()) rys.push_back(r);
    if (pts.empty()) {
      // Possible only when the points all sit strictly above h; every face
      // of a pointed-modulo-lineality polyhedron contains a minimal face.
      throw std::logic_error("polyhedron: facet without a minimal face");
    }
    out.push_back(from_generators(ambient_, pts, rys, lineality_));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("polyhedron: ambient mismatch");
  if (is_empty() || other.is_empty()) return empty_set(ambient_);
  std::vector<Inequality> ineqs = inequalities_;
  ineqs.insert(ineqs.end(), other.inequalities_.begin(), other.inequalities_.end());
  std::vector<Equation> eqs = equations_;
  eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
  return from_constraints(ambient_, ineqs, eqs);
}

Polyhedron Polyhedron::intersect(const Inequality& h) const {
  if (is_empty()) return *this;
  std::vector<Inequality> ineqs = inequalities_;
  ineqs.push_back(h);
  return from_constraints(ambient_, ineqs, equations_);
}

Polyhedron Polyhedron::intersect(const Equation& h) const {
  if (is_empty()) return *this;
  std::vector<Equation> eqs = equations_;
  eqs.push_back(h);
  return from_constraints(ambient_, inequalities_, eqs);
}

Polyhedron Polyhedron::image(const RatMatrix& M, std::size_t target) const {
  check_rows(M, ambient_, "matrix row");
  if (M.size() != target) throw std::invalid_argument("polyhedron: image matrix has wrong row count");
  if (is_empty()) return empty_set(target);
  auto apply = [&](const RatMatrix& vs) {
    RatMatrix out;
    for (const auto& v : vs) out.push_back(mat_vec(M, v));
    return out;
  };
  return from_generators(target, apply(points_), apply(rays_), apply(lineality_));
}

Polyhedron Polyhedron::translate(const RatVector& shift) const {
  if (shift.size() != ambient_) throw std::invalid_argument("polyhedron: shift of wrong length");
  if (is_empty()) return *this;
  RatMatrix pts;
  for (const auto& p : points_) pts.push_back(add(p, shift));
  return from_generators(ambient_, pts, rays_, lineality_);
}

Polyhedron Polyhedron::negate() const {
  if (is_empty()) return *this;
  RatMatrix pts, rys;
  for (const auto& p : points_) pts.push_back(negated(p));
  for (const auto& r : rays_) rys.push_back(negated(r));
  return from_generators(ambient_, pts, rys, lineality_);
}

Polyhedron Polyhedron::product(const Polyhedron& other) const {
  const std::size_t D = ambient_ + other.ambient_;
  if (is_empty() || other.is_empty()) return empty_set(D);
  auto pad = [](const RatVector& a, const RatVector& b) {
    RatVector v = a;
    v.insert(v.end(), b.begin(), b.end());
    return v;
  };
  const RatVector za = zeros(ambient_), zb = zeros(other.ambient_);
  RatMatrix pts, rys, lin;
  for (const auto& p : points_)
    for (const auto& q : other.points_) pts.push_back(pad(p, q));
  for (const auto& r : rays_) rys.push_back(pad(r, zb));
  for (const auto& r : other.rays_) rys.push_back(pad(za, r));
  for (const auto& l : lineality_) lin.push_back(pad(l, zb));
  for (const auto& l : other.lineality_) lin.push_back(pad(za, l));
  return from_generators(D, pts, rys, lin);
}

Polyhedron Polyhedron::minkowski_sum(const Polyhedron& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("polyhedron: ambient mismatch");
  if (is_empty() || other.is_empty()) return empty_set(ambient_);
  RatMatrix pts, rys = rays_, lin = lineality_;
  for (const auto& p : points_)
    for (const auto& q : other.points_) pts.push_back(add(p, q));
  rys.insert(rys.end(), other.rays_.begin(), other.rays_.end());
  lin.insert(lin.end(), other.lineality_.begin(), other.lineality_.end());
  return from_generators(ambient_, pts, rys, lin);
}

bool operator<(const Polyhedron& a, const Polyhedron& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  if (a.points_ != b.points_) return a.points_ < b.points_;
  if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
  return a.lineality_ < b.lineality_;
}

std::string to_string(const Polyhedron& p) {
  if (p.is_empty()) return "{}";
  std::string s = "{points:";
  for (const auto& v : p.points()) s += " " + to_string(v);
  if (!p.rays().empty()) {
    s += "; rays:";
    for (const auto& v : p.rays()) s += " " + to_string(v);
  }
  if (!p.lineality().empty()) {
    s += "; lineality:";
    for (const auto& v : p.lineality()) s += " " + to_string(v);
  }
  return s + "}";
}

}  // namespace tropcrit
