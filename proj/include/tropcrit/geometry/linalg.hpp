#pragma once

#include "tropcrit/geometry/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tropcrit {

using RatMatrix = std::vector<RatVector>;  // row-major, rows of equal length

struct RowEchelon {
  RatMatrix rows;                     // nonzero rows of the reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each row
};

/// Reduced row echelon form of the row space. `cols` is needed when `m` is empty.
RowEchelon rref(const RatMatrix& m, std::size_t cols);
std::size_t rank(const RatMatrix& m, std::size_t cols);

/// Basis of {x : m x = 0}.
RatMatrix nullspace(const RatMatrix& m, std::size_t cols);

/// Reduces `v` modulo the row space described by `basis` (an rref): the
/// result has zero entries in every pivot column. Canonical per coset.
RatVector reduce_modulo(const RatVector& v, const RowEchelon& basis);

bool in_row_space(const RatVector& v, const RowEchelon& basis);

/// Solves m x = b; nullopt when inconsistent. Free variables are set to 0.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b, std::size_t cols);

RatVector mat_vec(const RatMatrix& m, const RatVector& v);

}  // namespace tropcrit
