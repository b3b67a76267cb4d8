#include "tropcrit/geometry/linalg.hpp"

#include <stdexcept>

namespace tropcrit {

RowEchelon rref(const RatMatrix& m, std::size_t cols) {
  RatMatrix a = m;
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("rref: ragged matrix");
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rat inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const RatMatrix& m, std::size_t cols) { return rref(m, cols).rows.size(); }

RatMatrix nullspace(const RatMatrix& m, std::size_t cols) {
  const RowEchelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVector reduce_modulo(const RatVector& v, const RowEchelon& basis) {
  RatVector r = v;
  for (std::size_t i = 0; i < basis.rows.size(); ++i) {
    const Rat f = r[basis.pivots[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!basis.rows[i][j].is_zero()) r[j] -= f * basis.rows[i][j];
  }
  return r;
}

bool in_row_space(const RatVector& v, const RowEchelon& basis) {
  return is_zero(reduce_modulo(v, basis));
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b, std::size_t cols) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  RatMatrix aug;
  aug.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    RatVector row = m[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  const RowEchelon e = rref(aug, cols + 1);
  RatVector x(cols, Rat(0));
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  RatVector r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

}  // namespace tropcrit
