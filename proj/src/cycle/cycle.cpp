#include "tropcrit/cycle/cycle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace tropcrit {

namespace {

using SpanKey = std::pair<RatMatrix, RatVector>;

SpanKey affine_key(const Polyhedron& p) {
  const RowEchelon& dirs = p.direction_space();
  return {dirs.rows, reduce_modulo(p.points().front(), dirs)};
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix out(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Rat(m(i, j));
  return out;
}

// Does the hyperplane normal·x = offset pass through the relative interior?
bool cuts(const Polyhedron& p, const RatVector& normal, const Rat& offset) {
  bool above = false, below = false;
  for (const auto& l : p.lineality())
    if (!dot(normal, l).is_zero()) return true;
  for (const auto& x : p.points()) {
    const Rat t = dot(normal, x) - offset;
    above = above || t > 0;
    below = below || t < 0;
  }
  for (const auto& r : p.rays()) {
    const Rat t = dot(normal, r);
    above = above || t > 0;
    below = below || t < 0;
  }
  return above && below;
}

void split(const Polyhedron& p, const std::vector<Inequality>& cuts_by, std::size_t from,
           std::vector<Polyhedron>& out) {
  for (std::size_t i = from; i < cuts_by.size(); ++i) {
    const Inequality& h = cuts_by[i];
    if (!cuts(p, h.normal, h.offset)) continue;
    split(p.intersect(h), cuts_by, i + 1, out);
    split(p.intersect(Inequality{negated(h.normal), Rat(-h.offset)}), cuts_by, i + 1, out);
    return;
  }
  out.push_back(p);
}

// Is every generator of q on the nonpositive side of normal·x - offset?
bool below(const Polyhedron& q, const Inequality& h) {
  for (const auto& x : q.points())
    if (dot(h.normal, x) > h.offset) return false;
  for (const auto& r : q.rays())
    if (dot(h.normal, r) > 0) return false;
  for (const auto& l : q.lineality())
    if (!dot(h.normal, l).is_zero()) return false;
  return true;
}

std::optional<Polyhedron> try_merge(const Polyhedron& p, const Polyhedron& q) {
  const int d = p.dim();
  for (const auto& h : p.inequalities()) {
    if (!below(q, h)) continue;
    if (p.intersect(q).dim() != d - 1) return std::nullopt;
    RatMatrix pts = p.points(), rys = p.rays();
    pts.insert(pts.end(), q.points().begin(), q.points().end());
    rys.insert(rys.end(), q.rays().begin(), q.rays().end());
    const Polyhedron u = Polyhedron::from_generators(p.ambient(), pts, rys, p.lineality());
    if (u.intersect(h) == p && u.intersect(Inequality{negated(h.normal), Rat(-h.offset)}) == q) return u;
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<WeightedCell> refine_group(const std::vector<WeightedCell>& group) {
  const int d = group.front().cell.dim();
  bool overlap = false;
  for (std::size_t i = 0; i < group.size() && !overlap; ++i)
    for (std::size_t j = i + 1; j < group.size() && !overlap; ++j)
      overlap = group[i].cell.intersect(group[j].cell).dim() == d;
  if (!overlap) return group;

  std::vector<Inequality> hyperplanes;
  for (const auto& wc : group)
    for (const auto& h : wc.cell.inequalities()) hyperplanes.push_back(h);
  std::vector<Polyhedron> pieces;
  for (const auto& wc : group) split(wc.cell, hyperplanes, 0, pieces);
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());

  std::vector<WeightedCell> out;
  for (auto& piece : pieces) {
    if (piece.dim() != d) continue;
    const RatVector x = piece.relative_interior_point();
    Rat w = 0;
    for (const auto& wc : group)
      if (wc.cell.contains(x)) w += wc.weight;
    if (!w.is_zero()) out.push_back({std::move(piece), w});
  }
  return out;
}

std::vector<WeightedCell> coarsen_group(std::vector<WeightedCell> group) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < group.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < group.size() && !changed; ++j) {
        if (group[i].weight != group[j].weight) continue;
        auto merged = try_merge(group[i].cell, group[j].cell);
        if (!merged) merged = try_merge(group[j].cell, group[i].cell);
        if (!merged) continue;
        group[i].cell = std::move(*merged);
        group.erase(group.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
  }
  return group;
}

template <class F>
TropicalCycle per_span(const TropicalCycle& c, F&& f) {
  std::map<SpanKey, std::vector<WeightedCell>> groups;
  for (const auto& wc : c.cells()) groups[affine_key(wc.cell)].push_back(wc);
  std::vector<WeightedCell> out;
  for (auto& [key, group] : groups) {
    auto done = f(group);
    out.insert(out.end(), done.begin(), done.end());
  }
  return TropicalCycle(c.factors(), c.dim(), std::move(out));
}

void require_same_ambient(const TropicalCycle& a, const TropicalCycle& b, const char* what) {
  if (a.factors() != b.factors()) throw std::invalid_argument(std::string(what) + ": ambient mismatch");
}

}  // namespace

TropicalCycle::TropicalCycle(std::vector<std::size_t> factors, int dim, std::vector<WeightedCell> cells)
    : factors_(std::move(factors)), dim_(dim) {
  ambient_ = std::accumulate(factors_.begin(), factors_.end(), std::size_t{0});
  if (dim < 0 || static_cast<std::size_t>(dim) > ambient_)
    throw StructuralError("cycle: dimension " + std::to_string(dim) + " outside [0, " +
                          std::to_string(ambient_) + "]");
  std::sort(cells.begin(), cells.end(),
            [](const WeightedCell& x, const WeightedCell& y) { return x.cell < y.cell; });
  for (auto& wc : cells) {
    if (wc.cell.ambient() != ambient_) throw StructuralError("cycle: cell in the wrong ambient space");
    if (wc.cell.dim() != dim)
      throw StructuralError("cycle: cell " + to_string(wc.cell) + " has dimension " +
                            std::to_string(wc.cell.dim()) + ", expected " + std::to_string(dim));
    if (!cells_.empty() && cells_.back().cell == wc.cell) {
      cells_.back().weight += wc.weight;
      if (cells_.back().weight.is_zero()) cells_.pop_back();
    } else if (!wc.weight.is_zero()) {
      cells_.push_back(std::move(wc));
    }
  }
}

TropicalCycle TropicalCycle::in_projective(std::size_t n, int dim, std::vector<WeightedCell> cells) {
  return TropicalCycle({n}, dim, std::move(cells));
}

std::size_t TropicalCycle::n() const {
  if (factors_.size() != 1) throw std::invalid_argument("cycle: not a single projective factor");
  return factors_.front();
}

std::vector<QuotientCell> quotient_cells(const TropicalCycle& c) {
  std::vector<QuotientCell> out;
  auto lift = [&](const RatMatrix& m) {
    RatMatrix r;
    for (const auto& v : m) r.push_back(from_chart(v, c.factors()));
    return r;
  };
  for (const auto& wc : c.cells())
    out.push_back({lift(wc.cell.points()), lift(wc.cell.rays()), lift(wc.cell.lineality()), wc.weight});
  return out;
}

TropicalCycle cycle_from_quotient(const std::vector<std::size_t>& factors, int dim,
                                  const std::vector<QuotientCell>& cells) {
  std::size_t width = 0;
  for (auto f : factors) width += f + 1;
  std::size_t ambient = 0;
  for (auto f : factors) ambient += f;
  auto chart = [&](const RatMatrix& m) {
    RatMatrix r;
    for (const auto& v : m) {
      if (v.size() != width)
        throw std::invalid_argument("cycle: vector " + to_string(v) + " does not have " + std::to_string(width) +
                                    " coordinates");
      r.push_back(to_chart(v, factors));
    }
    return r;
  };
  std::vector<WeightedCell> out;
  for (const auto& qc : cells) {
    if (qc.vertices.empty()) throw StructuralError("cycle: cell without a vertex");
    out.push_back(
        {Polyhedron::from_generators(ambient, chart(qc.vertices), chart(qc.rays), chart(qc.lineality)), qc.weight});
  }
  return TropicalCycle(factors, dim, std::move(out));
}

ZeroCycle::ZeroCycle(std::vector<ZeroAtom> atoms) {
  std::sort(atoms.begin(), atoms.end(), [](const ZeroAtom& a, const ZeroAtom& b) { return a.point < b.point; });
  for (auto& a : atoms) {
    if (!atoms_.empty() && atoms_.back().point == a.point) {
      atoms_.back().multiplicity += a.multiplicity;
      if (atoms_.back().multiplicity.is_zero()) atoms_.pop_back();
    } else if (!a.multiplicity.is_zero()) {
      atoms_.push_back(std::move(a));
    }
  }
}

ZeroCycle to_zero_cycle(const TropicalCycle& c) {
  if (c.dim() != 0) throw std::invalid_argument("to_zero_cycle: cycle has positive dimension");
  const std::size_t n = c.n();
  (void)n;
  std::vector<ZeroAtom> atoms;
  for (const auto& wc : c.cells()) atoms.push_back({QuotientVector(from_chart(wc.cell.points().front())), wc.weight});
  return ZeroCycle(std::move(atoms));
}

Rat total_mass(const ZeroCycle& z) {
  Rat s = 0;
  for (const auto& a : z.atoms()) s += a.multiplicity;
  return s;
}

TropicalCycle add(const TropicalCycle& a, const TropicalCycle& b) {
  require_same_ambient(a, b, "add");
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.dim() != b.dim()) throw std::invalid_argument("add: dimension mismatch");
  std::vector<WeightedCell> cells = a.cells();
  cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  return TropicalCycle(a.factors(), a.dim(), std::move(cells));
}

TropicalCycle scale(const TropicalCycle& c, const Rat& factor) {
  std::vector<WeightedCell> cells = c.cells();
  for (auto& wc : cells) wc.weight *= factor;
  return TropicalCycle(c.factors(), c.dim(), std::move(cells));
}

TropicalCycle refine(const TropicalCycle& c) { return per_span(c, refine_group); }

TropicalCycle normalize(const TropicalCycle& c) {
  return per_span(refine(c), [](const std::vector<WeightedCell>& g) { return coarsen_group(g); });
}

bool equivalent(const TropicalCycle& a, const TropicalCycle& b) {
  if (a.factors() != b.factors()) return false;
  if (a.dim() != b.dim()) return refine(a).empty() && refine(b).empty();
  return refine(add(a, scale(b, Rat(-1)))).empty();
}

TropicalCycle skeleton(std::size_t n, std::size_t l) {
  if (n < 1 || l > n - 1) throw std::invalid_argument("skeleton: need 0 <= l <= n-1");
  const std::size_t k = n - l - 1;
  auto direction = [&](std::size_t i) {
    return i < n ? unit_vector(n, i) : RatVector(n, Rat(-1));
  };
  std::vector<WeightedCell> cells;
  std::vector<bool> chosen(n + 1, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    RatMatrix rays;
    for (std::size_t i = 0; i <= n; ++i)
      if (chosen[i]) rays.push_back(direction(i));
    cells.push_back({Polyhedron::cone(zeros(n), rays), Rat(1)});
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return TropicalCycle::in_projective(n, static_cast<int>(k), std::move(cells));
}

TropicalCycle standard_hyperplane(std::size_t n) { return skeleton(n, 0); }

TropicalCycle whole_space(const std::vector<std::size_t>& factors) {
  const std::size_t D = std::accumulate(factors.begin(), factors.end(), std::size_t{0});
  return TropicalCycle(factors, static_cast<int>(D), {{Polyhedron::whole_space(D), Rat(1)}});
}

TropicalCycle point_cycle(const QuotientVector& p, const Rat& multiplicity) {
  return TropicalCycle::in_projective(p.n(), 0, {{Polyhedron::point(to_chart(p.coords())), multiplicity}});
}

TropicalCycle translate_chart(const TropicalCycle& c, const RatVector& shift) {
  std::vector<WeightedCell> cells;
  for (const auto& wc : c.cells()) cells.push_back({wc.cell.translate(shift), wc.weight});
  return TropicalCycle(c.factors(), c.dim(), std::move(cells));
}

TropicalCycle translate_cycle(const TropicalCycle& c, const QuotientVector& tau) {
  if (tau.n() != c.n()) throw std::invalid_argument("translate_cycle: ambient mismatch");
  return translate_chart(c, to_chart(tau.coords()));
}

TropicalCycle reflect_cycle(const TropicalCycle& c) {
  std::vector<WeightedCell> cells;
  for (const auto& wc : c.cells()) cells.push_back({wc.cell.negate(), wc.weight});
  return TropicalCycle(c.factors(), c.dim(), std::move(cells));
}

TropicalCycle cross(const TropicalCycle& a, const TropicalCycle& b) {
  std::vector<std::size_t> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  std::vector<WeightedCell> cells;
  for (const auto& x : a.cells())
    for (const auto& y : b.cells()) cells.push_back({x.cell.product(y.cell), x.weight * y.weight});
  return TropicalCycle(std::move(factors), a.dim() + b.dim(), std::move(cells));
}

TropicalCycle linear_pushforward(const TropicalCycle& c, const IntMatrix& chart_map,
                                 const std::vector<std::size_t>& target_factors) {
  const std::size_t target = std::accumulate(target_factors.begin(), target_factors.end(), std::size_t{0});
  if (chart_map.cols() != c.ambient_dim() || chart_map.rows() != target)
    throw std::invalid_argument("linear_pushforward: matrix shape does not match the ambients");
  if (static_cast<std::size_t>(c.dim()) > target) return TropicalCycle(target_factors, static_cast<int>(target), {});
  const RatMatrix M = to_rat(chart_map);
  std::vector<WeightedCell> cells;
  for (const auto& wc : c.cells()) {
    Polyhedron img = wc.cell.image(M, target);
    if (img.dim() != c.dim()) continue;
    const IntMatrix basis = saturation_basis(wc.cell.direction_space().rows, c.ambient_dim());
    IntMatrix mapped(basis.rows(), target);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      const IntVector v = chart_map * basis.row(i);
      for (std::size_t j = 0; j < target; ++j) mapped(i, j) = v[j];
    }
    cells.push_back({std::move(img), wc.weight * Rat(index_in_saturation(mapped))});
  }
  return normalize(TropicalCycle(target_factors, c.dim(), std::move(cells)));
}

TropicalCycle linear_pushforward_homogeneous(const TropicalCycle& c, const IntMatrix& M) {
  const std::size_t n = c.n();
  if (M.cols() != n + 1 || M.rows() < 2)
    throw std::invalid_argument("linear_pushforward: matrix must have n+1 columns and at least 2 rows");
  const std::size_t m = M.rows() - 1;
  Int row_sum = 0;
  for (std::size_t j = 0; j <= n; ++j) row_sum += M(0, j);
  for (std::size_t i = 1; i <= m; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j <= n; ++j) s += M(i, j);
    if (s != row_sum) throw std::invalid_argument("linear_pushforward: map does not preserve the line R·1");
  }
  IntMatrix chart_map(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) chart_map(i, j) = M(i, j) - M(m, j);
  return linear_pushforward(c, chart_map, {m});
}

TropicalCycle minkowski_convolve(const TropicalCycle& a, const TropicalCycle& b, int sign) {
  require_same_ambient(a, b, "minkowski_convolve");
  if (sign != 1 && sign != -1) throw std::invalid_argument("minkowski_convolve: sign must be +1 or -1");
  const std::size_t D = a.ambient_dim();
  if (static_cast<std::size_t>(a.dim() + b.dim()) > D) return TropicalCycle(a.factors(), static_cast<int>(D), {});
  IntMatrix L(D, 2 * D);
  for (std::size_t i = 0; i < D; ++i) {
    L(i, i) = 1;
    L(i, D + i) = sign;
  }
  const TropicalCycle product = cross(a, b);
  return linear_pushforward(product, L, a.factors());
}

TropicalCycle diagonal_pushforward(const TropicalCycle& c, std::size_t copies) {
  const std::size_t n = c.n();
  if (copies == 0) throw std::invalid_argument("diagonal_pushforward: need at least one copy");
  IntMatrix L(n * copies, n);
  for (std::size_t k = 0; k < copies; ++k)
    for (std::size_t i = 0; i < n; ++i) L(k * n + i, i) = 1;
  return linear_pushforward(c, L, std::vector<std::size_t>(copies, n));
}

std::string to_string(const TropicalCycle& c) {
  std::string s = "cycle(dim " + std::to_string(c.dim()) + ") [";
  bool first = true;
  for (const auto& qc : quotient_cells(c)) {
    s += first ? "" : ", ";
    first = false;
    s += to_string(qc.weight) + "*{";
    for (const auto& v : qc.vertices) s += " " + to_string(v);
    if (!qc.rays.empty()) {
      s += " ;";
      for (const auto& v : qc.rays) s += " " + to_string(v);
    }
    if (!qc.lineality.empty()) {
      s += " ; lin";
      for (const auto& v : qc.lineality) s += " " + to_string(v);
    }
    s += " }";
  }
  return s + "]";
}

}  // namespace tropcrit
