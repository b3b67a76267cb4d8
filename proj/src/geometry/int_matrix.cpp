#include "tropcrit/geometry/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace tropcrit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
  IntVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

RatVector IntMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
  RatVector r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && !v[j].is_zero()) r[i] += Rat((*this)(i, j)) * v[j];
  return r;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Int(1);
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Int(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

struct SmithState {
  IntMatrix A, U, V, Vi;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A(i, c), A(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A(r, i), A(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
    for (std::size_t c = 0; c < Vi.cols(); ++c) std::swap(Vi(i, c), Vi(j, c));
  }
  // row_i += q row_j
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) += q * A(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) += q * U(j, c);
  }
  // col_i += q col_j; the inverse update acts on rows of Vi.
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t r = 0; r < A.rows(); ++r) A(r, i) += q * A(r, j);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, i) += q * V(r, j);
    for (std::size_t c = 0; c < Vi.cols(); ++c) Vi(j, c) -= q * Vi(i, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
  }
};

}  // namespace

SmithForm snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithState s{m, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(cols)};

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool any = true;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (s.A(i, j) != 0 && (pr == rows || abs(s.A(i, j)) < abs(s.A(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        any = false;
        break;
      }
      s.swap_rows(t, pr);
      s.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.A(i, t) == 0) continue;
        s.add_row(i, t, -(s.A(i, t) / s.A(t, t)));
        if (s.A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.A(t, j) == 0) continue;
        s.add_col(j, t, -(s.A(t, j) / s.A(t, t)));
        if (s.A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s.A(i, j) % s.A(t, t) != 0) {
            s.add_row(t, i, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (!any) break;
    if (s.A(t, t) < 0) s.negate_row(t);
  }
  return SmithForm{std::move(s.U), std::move(s.A), std::move(s.V), std::move(s.Vi)};
}

std::vector<Int> invariant_factors(const IntMatrix& m) {
  const SmithForm f = snf(m);
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(f.D.rows(), f.D.cols()); ++i)
    if (f.D(i, i) != 0) out.push_back(f.D(i, i));
  return out;
}

IntMatrix saturation_basis(const std::vector<RatVector>& generators, std::size_t r) {
  std::vector<IntVector> rows;
  for (const auto& g : generators) {
    if (g.size() != r) throw std::invalid_argument("saturation_basis: generator length mismatch");
    if (is_zero(g)) continue;
    rows.push_back(to_int_vector(primitive_direction(g)));
  }
  if (rows.empty()) return IntMatrix(0, r);
  const SmithForm f = snf(IntMatrix::from_rows(rows, r));
  std::size_t rk = 0;
  while (rk < std::min(f.D.rows(), f.D.cols()) && f.D(rk, rk) != 0) ++rk;
  IntMatrix basis(rk, r);
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < r; ++j) basis(i, j) = f.V_inverse(i, j);
  return basis;
}

std::optional<Int> lattice_index(const std::vector<IntVector>& a, const std::vector<IntVector>& b,
                                 std::size_t r) {
  std::vector<RatVector> ga, gb;
  for (const auto& v : a) ga.push_back(to_rat_vector(v));
  for (const auto& v : b) gb.push_back(to_rat_vector(v));
  const IntMatrix sa = saturation_basis(ga, r);
  const IntMatrix sb = saturation_basis(gb, r);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < sa.rows(); ++i) rows.push_back(sa.row(i));
  for (std::size_t i = 0; i < sb.rows(); ++i) rows.push_back(sb.row(i));
  if (rows.empty()) {
    if (r == 0) return Int(1);
    return std::nullopt;
  }
  const auto factors = invariant_factors(IntMatrix::from_rows(rows, r));
  if (factors.size() < r) return std::nullopt;
  Int index = 1;
  for (const auto& d : factors) index *= d;
  return index;
}

Int index_in_saturation(const IntMatrix& m) {
  Int index = 1;
  for (const auto& d : invariant_factors(m)) index *= d;
  return index;
}

}  // namespace tropcrit
