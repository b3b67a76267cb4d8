#include "tropcrit/chow/measure.hpp"

#include "tropcrit/cycle/balancing.hpp"
#include "tropcrit/geometry/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tropcrit {

Indicator argmin_set(const QuotientVector& a) {
  const Rat low = *std::min_element(a.coords().begin(), a.coords().end());
  Indicator out;
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    if (a[i] == low) out.push_back(i);
  return out;
}

MAMeasure::MAMeasure(std::size_t n, std::size_t dim, std::vector<MAAtom> atoms) : n_(n), dim_(dim) {
  std::sort(atoms.begin(), atoms.end(), [](const MAAtom& a, const MAAtom& b) { return a.point < b.point; });
  for (auto& a : atoms) {
    if (a.point.n() != n) throw std::invalid_argument("measure: atom " + to_string(a.point.coords()) + " not in P^" +
                                                      std::to_string(n));
    if (a.mass <= 0) throw std::invalid_argument("measure: atom masses must be positive");
    if (a.indicator != argmin_set(a.point))
      throw std::invalid_argument("measure: indicator " + to_string(a.indicator) + " of atom " +
                                  to_string(a.point.coords()) + " is not its argmin set " +
                                  to_string(argmin_set(a.point)));
    if (!atoms_.empty() && atoms_.back().point == a.point) atoms_.back().mass += a.mass;
    else atoms_.push_back(std::move(a));
  }
}

Rat MAMeasure::total_mass() const {
  Rat s = 0;
  for (const auto& a : atoms_) s += a.mass;
  return s;
}

QuotientVector indicator_point(std::size_t n, const Indicator& indicator) {
  RatVector v(n + 1, Rat(1));
  for (auto i : indicator) {
    if (i > n) throw std::invalid_argument("indicator_point: index out of range");
    v[i] = 0;
  }
  if (indicator.empty()) throw std::invalid_argument("indicator_point: empty indicator");
  return QuotientVector(v);
}

MAMeasure ma_measure(const TropicalCycle& x, const IntersectionOptions& options) {
  const std::size_t n = x.n();
  if (x.dim() > static_cast<int>(n) - 1) throw std::invalid_argument("ma_measure: need dim X <= n-1");
  if (!is_balanced(x).balanced) throw std::invalid_argument("ma_measure: input cycle is not balanced");
  const TropicalCycle z =
      x.dim() == 0 ? x : stable_intersection(x, skeleton(n, static_cast<std::size_t>(x.dim() - 1)), options);
  std::vector<MAAtom> atoms;
  const ZeroCycle atoms_of = to_zero_cycle(z);
  for (const auto& a : atoms_of.atoms()) {
    if (a.multiplicity <= 0)
      throw std::invalid_argument("ma_measure: negative mass at " + to_string(a.point.coords()) +
                                  "; the cycle is not effective");
    atoms.push_back({a.point, a.multiplicity, argmin_set(a.point)});
  }
  return MAMeasure(n, static_cast<std::size_t>(x.dim()), std::move(atoms));
}

Rat bergman_value(const Indicator& indicator, const QuotientVector& lambda) {
  if (indicator.empty()) throw std::invalid_argument("bergman_value: empty indicator");
  Rat best = -lambda[indicator.front()];
  for (auto i : indicator) {
    if (i > lambda.n()) throw std::invalid_argument("bergman_value: index out of range");
    best = std::max(best, Rat(-lambda[i]));
  }
  return best;
}

Polymatroid::Polymatroid(std::size_t ground, std::vector<Rat> rank) : ground_(ground), rank_(std::move(rank)) {
  if (ground > 16 || rank_.size() != (std::size_t{1} << ground))
    throw std::invalid_argument("polymatroid: need one rank value per subset");
}

bool Polymatroid::is_monotone() const {
  for (std::uint32_t s = 0; s < rank_.size(); ++s)
    for (std::size_t i = 0; i < ground_; ++i)
      if (!(s >> i & 1u) && rank_[s | (1u << i)] < rank_[s]) return false;
  return true;
}

bool Polymatroid::is_submodular() const {
  for (std::uint32_t s = 0; s < rank_.size(); ++s)
    for (std::size_t i = 0; i < ground_; ++i)
      for (std::size_t j = i + 1; j < ground_; ++j) {
        if ((s >> i & 1u) || (s >> j & 1u)) continue;
        const std::uint32_t si = s | (1u << i), sj = s | (1u << j);
        if (rank_[si] + rank_[sj] < rank_[si | sj] + rank_[s]) return false;
      }
  return true;
}

std::vector<RatVector> Polymatroid::greedy_vertices() const {
  std::vector<std::size_t> order(ground_);
  std::iota(order.begin(), order.end(), 0);
  std::set<RatVector> seen;
  do {
    RatVector x(ground_);
    std::uint32_t prefix = 0;
    for (auto i : order) {
      const std::uint32_t next = prefix | (1u << i);
      x[i] = rank_[next] - rank_[prefix];
      prefix = next;
    }
    seen.insert(std::move(x));
  } while (std::next_permutation(order.begin(), order.end()));
  return {seen.begin(), seen.end()};
}

MAPolytope ma_polytope(const MAMeasure& m) {
  const std::size_t n = m.n();
  Polytope sum = point_polytope(QuotientVector::zero(n));
  std::vector<Rat> rank(std::size_t{1} << (n + 1), Rat(0));
  for (const auto& a : m.atoms()) {
    sum = minkowski_sum(sum, dilate(simplex(n, a.indicator), a.mass));
    std::uint32_t mask = 0;
    for (auto i : a.indicator) mask |= 1u << i;
    for (std::uint32_t s = 0; s < rank.size(); ++s)
      if (s & mask) rank[s] += a.mass;
  }
  Polymatroid pm(n + 1, std::move(rank));
  const Polytope base = convex_hull(pm.greedy_vertices(), n + 1, true);
  if (base != sum)
    throw InvariantViolation("ma_polytope: Minkowski sum differs from the polymatroid base polytope");
  return {std::move(sum), std::move(pm)};
}

Rat height_derivative(const MAMeasure& m, const QuotientVector& lambda) {
  if (lambda.n() != m.n()) throw std::invalid_argument("height_derivative: ambient mismatch");
  Rat s = 0;
  for (const auto& a : m.atoms()) s += a.mass * bergman_value(a.indicator, lambda);
  return Rat(static_cast<long>(m.dim() + 1)) * s;
}

Rat height_derivative(const MAMeasure& m, const QuotientVector& lambda, const Polytope& p_ma) {
  const Rat value = height_derivative(m, lambda);
  const Rat via_support = Rat(static_cast<long>(m.dim() + 1)) * support_value(p_ma, (-lambda).coords());
  if (value != via_support)
    throw InvariantViolation("height_derivative: " + to_string(value) + " differs from the support value " +
                             to_string(via_support));
  return value;
}

std::string to_string(const Indicator& indicator) {
  std::string s = "{";
  for (std::size_t i = 0; i < indicator.size(); ++i) s += (i ? "," : "") + std::to_string(indicator[i]);
  return s + "}";
}

}  // namespace tropcrit
