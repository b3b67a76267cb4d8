#pragma once

#include "tropcrit/geometry/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace tropcrit {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntVector operator*(const IntVector& v) const;
  RatVector operator*(const RatVector& v) const;
  bool operator==(const IntMatrix& o) const = default;

  bool is_diagonal() const;
  IntMatrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Determinant of a square matrix (fraction-free elimination).
Int determinant(const IntMatrix& m);

/// U·M·V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
/// `V_inverse` is carried along because saturation needs it.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inverse;
};

SmithForm snf(const IntMatrix& m);

/// Nonzero invariant factors of m.
std::vector<Int> invariant_factors(const IntMatrix& m);

/// Basis (rows) of L ∩ Z^r where L is the real span of `generators`.
IntMatrix saturation_basis(const std::vector<RatVector>& generators, std::size_t r);

/// [Z^r : sat(A) + sat(B)] where sat(X) is the integer points of the span of X.
/// nullopt ("infinite") when A ∪ B does not span R^r.
std::optional<Int> lattice_index(const std::vector<IntVector>& a, const std::vector<IntVector>& b,
                                 std::size_t r);

/// Index of the lattice generated by the rows of `m` inside its saturation
/// (product of the nonzero invariant factors).
Int index_in_saturation(const IntMatrix& m);

}  // namespace tropcrit
