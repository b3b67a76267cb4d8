#include "tropcrit/geometry/lp.hpp"

#include <stdexcept>

namespace tropcrit {

FeasibilityResult solve_feasibility(const RatMatrix& A, const RatVector& b, std::size_t cols) {
  const std::size_t m = A.size();
  if (b.size() != m) throw std::invalid_argument("solve_feasibility: rhs length mismatch");
  for (const auto& row : A)
    if (row.size() != cols) throw std::invalid_argument("solve_feasibility: ragged matrix");

  const std::size_t width = cols + m;
  std::vector<int> sign(m, 1);
  RatMatrix T(m, RatVector(width, Rat(0)));
  RatVector rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) sign[i] = -1;
    for (std::size_t j = 0; j < cols; ++j) T[i][j] = sign[i] < 0 ? Rat(-A[i][j]) : A[i][j];
    T[i][cols + i] = 1;
    rhs[i] = sign[i] < 0 ? Rat(-b[i]) : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = cols + i;

  // Phase-one objective: minimize the sum of artificials.
  RatVector reduced(width, Rat(0));
  Rat objective = 0;
  for (std::size_t i = 0; i < m; ++i) {
    objective += rhs[i];
    for (std::size_t j = 0; j < cols; ++j) reduced[j] -= T[i][j];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j)
      if (reduced[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      const Rat ratio = rhs[i] / T[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw std::logic_error("solve_feasibility: phase one cannot be unbounded");

    const Rat pivot = T[leave][enter];
    for (auto& x : T[leave]) x /= pivot;
    rhs[leave] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter].is_zero()) continue;
      const Rat f = T[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (!T[leave][j].is_zero()) T[i][j] -= f * T[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    const Rat f = reduced[enter];
    for (std::size_t j = 0; j < width; ++j)
      if (!T[leave][j].is_zero()) reduced[j] -= f * T[leave][j];
    objective += f * rhs[leave];
    basis[leave] = enter;
  }

  FeasibilityResult result;
  if (objective.is_zero()) {
    result.feasible = true;
    result.solution.assign(cols, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < cols) result.solution[basis[i]] = rhs[i];
  } else {
    // Duals y = c_B B^{-1} sit in the artificial reduced costs: 1 - y_i.
    result.farkas.assign(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
      const Rat y = 1 - reduced[cols + i];
      result.farkas[i] = sign[i] < 0 ? y : Rat(-y);
    }
  }
  return result;
}

bool verify_feasibility(const RatMatrix& A, const RatVector& b, const FeasibilityResult& r) {
  const std::size_t m = A.size();
  if (r.feasible) {
    if (r.solution.empty() && m > 0 && !A[0].empty()) return false;
    for (const auto& x : r.solution)
      if (x < 0) return false;
    for (std::size_t i = 0; i < m; ++i)
      if (dot(A[i], r.solution) != b[i]) return false;
    return true;
  }
  if (r.farkas.size() != m) return false;
  const std::size_t cols = m ? A[0].size() : 0;
  for (std::size_t j = 0; j < cols; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += A[i][j] * r.farkas[i];
    if (s < 0) return false;
  }
  return dot(b, r.farkas) < 0;
}

}  // namespace tropcrit
