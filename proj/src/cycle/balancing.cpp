#include "tropcrit/cycle/balancing.hpp"

#include <algorithm>
#include <map>

namespace tropcrit {

namespace {

using SpanKey = std::pair<RatMatrix, RatVector>;

SpanKey affine_key(const Polyhedron& p) {
  const RowEchelon& dirs = p.direction_space();
  return {dirs.rows, reduce_modulo(p.points().front(), dirs)};
}

RatMatrix transpose_rows(const IntMatrix& m) {
  RatMatrix t(m.cols(), RatVector(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t[j][i] = Rat(m(i, j));
  return t;
}

bool cuts(const Polyhedron& p, const Inequality& h) {
  for (const auto& l : p.lineality())
    if (!dot(h.normal, l).is_zero()) return true;
  bool above = false, below = false;
  for (const auto& x : p.points()) {
    const Rat t = dot(h.normal, x) - h.offset;
    above = above || t > 0;
    below = below || t < 0;
  }
  for (const auto& r : p.rays()) {
    const Rat t = dot(h.normal, r);
    above = above || t > 0;
    below = below || t < 0;
  }
  return above && below;
}

void split(const Polyhedron& p, const std::vector<Inequality>& hs, std::size_t from, std::vector<Polyhedron>& out) {
  for (std::size_t i = from; i < hs.size(); ++i) {
    if (!cuts(p, hs[i])) continue;
    split(p.intersect(hs[i]), hs, i + 1, out);
    split(p.intersect(Inequality{negated(hs[i].normal), Rat(-hs[i].offset)}), hs, i + 1, out);
    return;
  }
  out.push_back(p);
}

struct FacetOf {
  Polyhedron facet;
  std::size_t cell;
};

}  // namespace

RatVector primitive_normal(const Polyhedron& cell, const Polyhedron& facet) {
  const std::size_t D = cell.ambient();
  const std::size_t d = static_cast<std::size_t>(cell.dim());
  if (d == 0 || facet.dim() != cell.dim() - 1) throw std::invalid_argument("primitive_normal: not a facet");
  const IntMatrix B = saturation_basis(cell.direction_space().rows, D);
  const RatMatrix Bt = transpose_rows(B);

  RatMatrix in_cell;
  for (const auto& g : facet.direction_space().rows) {
    auto c = solve(Bt, g, d);
    if (!c) throw std::invalid_argument("primitive_normal: facet is not parallel to the cell");
    in_cell.push_back(*c);
  }
  IntVector w(d, Int(0));
  IntMatrix V = IntMatrix::identity(d);
  if (in_cell.empty()) {
    w[0] = 1;
  } else {
    const SmithForm f = snf(saturation_basis(in_cell, d));
    w = f.V_inverse.row(d - 1);
    V = f.V;
  }
  RatVector u = zeros(D);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < D; ++j) u[j] += Rat(w[i] * B(i, j));

  const RatVector step = sub(cell.relative_interior_point(), facet.relative_interior_point());
  const auto c = solve(Bt, step, d);
  Rat along = 0;
  for (std::size_t i = 0; i < d; ++i) along += (*c)[i] * Rat(V(i, d - 1));
  if (along < 0) u = negated(u);
  return u;
}

BalanceReport is_balanced(const TropicalCycle& c) {
  BalanceReport report;
  if (c.dim() == 0 || c.empty()) return report;
  const int d = c.dim();
  const auto& cells = c.cells();

  std::map<SpanKey, std::vector<std::size_t>> spans;
  for (std::size_t i = 0; i < cells.size(); ++i) spans[affine_key(cells[i].cell)].push_back(i);
  for (const auto& [key, ids] : spans)
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b)
        if (cells[ids[a]].cell.intersect(cells[ids[b]].cell).dim() == d)
          throw StructuralError("is_balanced: cells " + to_string(cells[ids[a]].cell) + " and " +
                                to_string(cells[ids[b]].cell) + " overlap without being equal");

  std::map<SpanKey, std::vector<FacetOf>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (auto& f : cells[i].cell.facets()) {
      SpanKey key = affine_key(f);
      groups[std::move(key)].push_back({std::move(f), i});
    }

  for (const auto& [key, group] : groups) {
    std::vector<Polyhedron> pieces;
    if (group.size() == 1) {
      pieces.push_back(group.front().facet);
    } else {
      std::vector<Inequality> hs;
      for (const auto& g : group)
        for (const auto& h : g.facet.inequalities()) hs.push_back(h);
      for (const auto& g : group) split(g.facet, hs, 0, pieces);
      std::sort(pieces.begin(), pieces.end());
      pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    }
    for (const auto& piece : pieces) {
      if (piece.dim() != d - 1) continue;
      const RatVector x = piece.relative_interior_point();
      RatVector total = zeros(c.ambient_dim());
      for (const auto& g : group)
        if (g.facet.contains(x))
          total = add(total, scaled(primitive_normal(cells[g.cell].cell, g.facet), cells[g.cell].weight));
      const RatVector defect = reduce_modulo(total, piece.direction_space());
      if (!is_zero(defect)) {
        report.balanced = false;
        report.face = piece;
        report.defect = defect;
        report.defect_quotient = from_chart(defect, c.factors());
        return report;
      }
    }
  }
  return report;
}

}  // namespace tropcrit
