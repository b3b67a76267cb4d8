#include "tropcrit/pl/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tropcrit {

namespace {

Rat pair_with(const IntVector& e, const RatVector& a) {
  Rat s = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!e[i].is_zero()) s += Rat(e[i]) * a[i];
  return s;
}

void check_point(const TropicalPolynomial& f, const QuotientVector& a) {
  if (a.n() != f.n()) throw std::invalid_argument("tropical polynomial: point has the wrong number of coordinates");
  if (!f.is_homogeneous())
    throw std::invalid_argument("tropical polynomial: quotient evaluation needs homogeneous exponents");
}

}  // namespace

TropicalPolynomial::TropicalPolynomial(std::size_t n, std::vector<Term> terms) : n_(n) {
  if (n < 1) throw std::invalid_argument("tropical polynomial: need n >= 1");
  if (terms.empty()) throw std::invalid_argument("tropical polynomial: no terms");
  for (const auto& t : terms)
    if (t.exponent.size() != n + 1)
      throw std::invalid_argument("tropical polynomial: exponent of length " + std::to_string(t.exponent.size()) +
                                  ", expected " + std::to_string(n + 1));
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return x.exponent != y.exponent ? x.exponent < y.exponent : x.valuation < y.valuation;
  });
  for (auto& t : terms)
    if (terms_.empty() || terms_.back().exponent != t.exponent) terms_.push_back(std::move(t));

  Int deg = 0;
  for (const auto& e : terms_.front().exponent) deg += e;
  degree_ = deg;
  for (const auto& t : terms_) {
    Int s = 0;
    for (const auto& e : t.exponent) s += e;
    if (s != deg) degree_.reset();
  }
}

TropicalPolynomial standard_min(std::size_t n) { return linear_form(RatVector(n + 1, Rat(0))); }

TropicalPolynomial linear_form(const RatVector& valuations) {
  if (valuations.size() < 2) throw std::invalid_argument("linear_form: need at least two coordinates");
  const std::size_t n = valuations.size() - 1;
  std::vector<Term> terms;
  for (std::size_t i = 0; i <= n; ++i) {
    IntVector e(n + 1, Int(0));
    e[i] = 1;
    terms.push_back({e, valuations[i]});
  }
  return TropicalPolynomial(n, std::move(terms));
}

Rat evaluate_affine(const TropicalPolynomial& f, const RatVector& a) {
  if (a.size() != f.n() + 1) throw std::invalid_argument("evaluate: point has the wrong number of coordinates");
  Rat best = pair_with(f.terms().front().exponent, a) + f.terms().front().valuation;
  for (const auto& t : f.terms()) best = std::min(best, pair_with(t.exponent, a) + t.valuation);
  return best;
}

Rat evaluate(const TropicalPolynomial& f, const QuotientVector& a) {
  check_point(f, a);
  return evaluate_affine(f, a.coords());
}

std::vector<IntVector> active_support(const TropicalPolynomial& f, const QuotientVector& a) {
  const Rat value = evaluate(f, a);
  std::vector<IntVector> out;
  for (const auto& t : f.terms())
    if (pair_with(t.exponent, a.coords()) + t.valuation == value) out.push_back(t.exponent);
  return out;
}

Polytope sup_differential(const TropicalPolynomial& f, const QuotientVector& a) {
  std::vector<RatVector> pts;
  for (const auto& e : active_support(f, a)) pts.push_back(to_rat_vector(e));
  return convex_hull(pts, f.n() + 1, true);
}

Roof newton_roof(const TropicalPolynomial& f) {
  const std::size_t w = f.n() + 1;
  Roof roof;
  std::vector<RatVector> exps;
  RatMatrix lifted;
  for (const auto& t : f.terms()) {
    RatVector e = to_rat_vector(t.exponent);
    exps.push_back(e);
    e.push_back(t.valuation);
    lifted.push_back(std::move(e));
  }
  roof.newton = convex_hull(exps, w, false);
  // Epigraph of the lower hull: conv{(I, v_I)} + R_+ e_last.
  const Polyhedron epi = Polyhedron::from_generators(w + 1, lifted, {unit_vector(w + 1, w)}, {});
  for (std::size_t k = 0; k < f.terms().size(); ++k) {
    const Term& t = f.terms()[k];
    std::optional<Rat> low;
    for (const auto& h : epi.inequalities()) {
      const Rat c = h.normal[w];
      if (c <= 0) continue;
      RatVector a(h.normal.begin(), h.normal.end() - 1);
      const Rat bound = (h.offset - dot(a, exps[k])) / c;
      if (!low || bound > *low) low = bound;
    }
    const Rat value = low.value_or(t.valuation);
    roof.entries.push_back({t.exponent, t.valuation, value, t.valuation == value});
  }
  return roof;
}

Polytope residual_polytope(const TropicalPolynomial& f) { return sup_differential(f, QuotientVector::zero(f.n())); }

bool torus_minimal(const TropicalPolynomial& f) { return contains(residual_polytope(f), QuotientVector::zero(f.n())); }

TropicalCycle corner_locus(const TropicalPolynomial& f) {
  if (!f.is_homogeneous()) throw std::invalid_argument("corner_locus: needs homogeneous exponents");
  const std::size_t n = f.n();
  const auto& terms = f.terms();
  auto chart_exponent = [&](const Term& t) {
    RatVector e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = Rat(t.exponent[i]);
    return e;
  };
  std::vector<RatVector> ex;
  for (const auto& t : terms) ex.push_back(chart_exponent(t));

  std::map<Polyhedron, bool> seen;
  std::vector<WeightedCell> cells;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      // Region where terms i and j tie and nothing is smaller.
      std::vector<Inequality> ineqs;
      for (std::size_t k = 0; k < terms.size(); ++k)
        if (k != i) ineqs.push_back({sub(ex[k], ex[i]), Rat(terms[i].valuation - terms[k].valuation)});
      const std::vector<Equation> eqs{{sub(ex[i], ex[j]), Rat(terms[j].valuation - terms[i].valuation)}};
      Polyhedron cell = Polyhedron::from_constraints(n, ineqs, eqs);
      if (cell.dim() != static_cast<int>(n) - 1 || seen.count(cell)) continue;
      seen[cell] = true;

      // Active exponents at an interior point span a Newton edge.
      const RatVector y = cell.relative_interior_point();
      std::vector<std::size_t> active;
      Rat best;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const Rat val = dot(ex[k], y) + terms[k].valuation;
        if (active.empty() || val < best) {
          active = {k};
          best = val;
        } else if (val == best) {
          active.push_back(k);
        }
      }
      const RatVector dir = primitive_direction(sub(ex[active[1]], ex[active[0]]));
      std::size_t pivot = 0;
      while (dir[pivot].is_zero()) ++pivot;
      Rat lo = 0, hi = 0;
      for (auto k : active) {
        const Rat c = (ex[k][pivot] - ex[active[0]][pivot]) / dir[pivot];
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      cells.push_back({std::move(cell), hi - lo});
    }
  }
  return TropicalCycle::in_projective(n, static_cast<int>(n) - 1, std::move(cells));
}

TropicalPolynomial translate(const TropicalPolynomial& f, const QuotientVector& tau) {
  if (tau.n() != f.n()) throw std::invalid_argument("translate: ambient mismatch");
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) t.valuation -= pair_with(t.exponent, tau.coords());
  return TropicalPolynomial(f.n(), std::move(terms));
}

TropicalPolynomial scale(const TropicalPolynomial& f, const Rat& c) {
  if (c < 0) throw std::invalid_argument("scale: factor must be nonnegative");
  if (c.is_zero()) return TropicalPolynomial(f.n(), {{IntVector(f.n() + 1, Int(0)), Rat(0)}});
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    IntVector e;
    for (const auto& x : t.exponent) {
      const Rat y = Rat(x) * c;
      if (!is_integer(y)) throw std::invalid_argument("scale: factor does not keep exponents integral");
      e.push_back(numerator(y));
    }
    terms.push_back({std::move(e), t.valuation * c});
  }
  return TropicalPolynomial(f.n(), std::move(terms));
}

TropicalPolynomial sum(const TropicalPolynomial& f, const TropicalPolynomial& g) {
  if (f.n() != g.n()) throw std::invalid_argument("sum: ambient mismatch");
  std::map<IntVector, Rat> best;
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) {
      IntVector e(a.exponent.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponent[i] + b.exponent[i];
      const Rat v = a.valuation + b.valuation;
      auto it = best.find(e);
      if (it == best.end()) best.emplace(std::move(e), v);
      else if (v < it->second) it->second = v;
    }
  std::vector<Term> terms;
  for (auto& [e, v] : best) terms.push_back({e, v});
  return TropicalPolynomial(f.n(), std::move(terms));
}

Rat chow_norm_log(const TropicalPolynomial& f) {
  Rat low = f.terms().front().valuation;
  for (const auto& t : f.terms()) low = std::min(low, t.valuation);
  return -low;
}

void validate(const PointConfiguration& c) {
  if (c.n < 1) throw std::invalid_argument("point configuration: need n >= 1");
  if (c.points.empty()) throw std::invalid_argument("point configuration: no points");
  for (const auto& p : c.points) {
    if (p.valuations.size() != c.n + 1)
      throw std::invalid_argument("point configuration: point " + to_string(p.valuations) + " does not have " +
                                  std::to_string(c.n + 1) + " valuations");
    if (p.multiplicity <= 0) throw std::invalid_argument("point configuration: multiplicities must be positive");
  }
}

ChowPolynomial point_config_chow(const PointConfiguration& c) {
  validate(c);
  Int common = 1;
  for (const auto& p : c.points) common = lcm(common, denominator(p.multiplicity));
  std::optional<TropicalPolynomial> product;
  for (const auto& p : c.points) {
    // The k-th tropical power, expanded so that every exponent of degree k
    // appears (scale() would only stretch the linear terms).
    const TropicalPolynomial factor = linear_form(p.valuations);
    const Int k = numerator(p.multiplicity * Rat(common));
    for (Int i = 0; i < k; ++i) product = product ? sum(*product, factor) : factor;
  }
  return {*product, common};
}

std::string to_string(const TropicalPolynomial& f) {
  std::string s = "min{";
  bool first = true;
  for (const auto& t : f.terms()) {
    s += first ? " " : ", ";
    first = false;
    s += "<" + to_string(to_rat_vector(t.exponent)) + ",a>+" + to_string(t.valuation);
  }
  return s + " }";
}

}  // namespace tropcrit
