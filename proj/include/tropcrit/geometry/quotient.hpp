#pragma once

// Points of R^{n+1}/R·1 stored by their sum-zero representative, and the
// chart y_i = a_i - a_n that identifies the quotient lattice Z^{n+1}/Z·1
// with Z^n.

#include "tropcrit/geometry/rational.hpp"

#include <compare>
#include <cstddef>

namespace tropcrit {

class QuotientVector {
 public:
  /// Canonicalizes any representative. Throws if fewer than two coordinates.
  explicit QuotientVector(RatVector representative);

  static QuotientVector zero(std::size_t n);
  /// Image of the i-th standard basis vector of R^{n+1}.
  static QuotientVector basis(std::size_t n, std::size_t i);

  const RatVector& coords() const { return coords_; }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  /// Projective dimension: coordinates are indexed 0..n.
  std::size_t n() const { return coords_.size() - 1; }

  QuotientVector operator+(const QuotientVector& o) const;
  QuotientVector operator-(const QuotientVector& o) const;
  QuotientVector operator-() const;
  QuotientVector operator*(const Rat& c) const;

  bool operator==(const QuotientVector& o) const { return coords_ == o.coords_; }
  bool operator<(const QuotientVector& o) const { return coords_ < o.coords_; }

 private:
  RatVector coords_;
};

/// v - mean(v)·1. Throws std::invalid_argument when v has fewer than 2 entries.
QuotientVector canonical_rep(const RatVector& v);

/// Pairing of two sum-zero representatives (the identification of the
/// quotient with its dual through the standard inner product).
Rat pairing(const QuotientVector& a, const QuotientVector& b);

/// Chart coordinates (a_0 - a_n, ..., a_{n-1} - a_n). Linear, so it also maps
/// directions. Accepts any representative of length n+1.
RatVector to_chart(const RatVector& representative);
/// Inverse chart: the sum-zero representative of (y, 0).
RatVector from_chart(const RatVector& y);

/// Blockwise versions for products of quotient spaces; `factors` lists the
/// projective dimension n of each block.
RatVector to_chart(const RatVector& representative, const std::vector<std::size_t>& factors);
RatVector from_chart(const RatVector& y, const std::vector<std::size_t>& factors);

}  // namespace tropcrit
