#include "tropcrit/geometry/quotient.hpp"

#include <numeric>
#include <stdexcept>

namespace tropcrit {

namespace {

RatVector sum_zero(RatVector v) {
  Rat mean = 0;
  for (const auto& x : v) mean += x;
  mean /= static_cast<long>(v.size());
  if (!mean.is_zero())
    for (auto& x : v) x -= mean;
  return v;
}

}  // namespace

QuotientVector::QuotientVector(RatVector representative) {
  if (representative.size() < 2)
    throw std::invalid_argument("quotient vector needs at least 2 coordinates, got " +
                                std::to_string(representative.size()));
  coords_ = sum_zero(std::move(representative));
}

QuotientVector QuotientVector::zero(std::size_t n) { return QuotientVector(zeros(n + 1)); }

QuotientVector QuotientVector::basis(std::size_t n, std::size_t i) {
  return QuotientVector(unit_vector(n + 1, i));
}

QuotientVector QuotientVector::operator+(const QuotientVector& o) const {
  return QuotientVector(add(coords_, o.coords_));
}
QuotientVector QuotientVector::operator-(const QuotientVector& o) const {
  return QuotientVector(sub(coords_, o.coords_));
}
QuotientVector QuotientVector::operator-() const { return QuotientVector(negated(coords_)); }
QuotientVector QuotientVector::operator*(const Rat& c) const {
  return QuotientVector(scaled(coords_, c));
}

QuotientVector canonical_rep(const RatVector& v) { return QuotientVector(v); }

Rat pairing(const QuotientVector& a, const QuotientVector& b) { return dot(a.coords(), b.coords()); }

RatVector to_chart(const RatVector& representative) {
  if (representative.size() < 2) throw std::invalid_argument("to_chart: need n+1 >= 2 coordinates");
  const std::size_t n = representative.size() - 1;
  RatVector y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = representative[i] - representative[n];
  return y;
}

RatVector from_chart(const RatVector& y) {
  RatVector a(y);
  a.emplace_back(0);
  return sum_zero(std::move(a));
}

RatVector to_chart(const RatVector& representative, const std::vector<std::size_t>& factors) {
  const std::size_t total = std::accumulate(factors.begin(), factors.end(), std::size_t{0}) + factors.size();
  if (representative.size() != total)
    throw std::invalid_argument("to_chart: expected " + std::to_string(total) + " coordinates");
  RatVector y;
  std::size_t offset = 0;
  for (std::size_t n : factors) {
    RatVector block(representative.begin() + offset, representative.begin() + offset + n + 1);
    auto c = to_chart(block);
    y.insert(y.end(), c.begin(), c.end());
    offset += n + 1;
  }
  return y;
}

RatVector from_chart(const RatVector& y, const std::vector<std::size_t>& factors) {
  const std::size_t total = std::accumulate(factors.begin(), factors.end(), std::size_t{0});
  if (y.size() != total)
    throw std::invalid_argument("from_chart: expected " + std::to_string(total) + " chart coordinates");
  RatVector a;
  std::size_t offset = 0;
  for (std::size_t n : factors) {
    RatVector block(y.begin() + offset, y.begin() + offset + n);
    auto c = from_chart(block);
    a.insert(a.end(), c.begin(), c.end());
    offset += n;
  }
  return a;
}

}  // namespace tropcrit
