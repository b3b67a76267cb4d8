#include "generators.hpp"

#include "tropcrit/chow/chow.hpp"
#include "tropcrit/cycle/balancing.hpp"

#include <doctest.h>

#include <numeric>

using namespace tropcrit;
using tropcrit::testing::Gen;

namespace {

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Rat q(long p, long d = 1) { return Rat(p) / Rat(d); }

QuotientVector qv(std::initializer_list<long> xs) { return canonical_rep(rv(xs)); }

TropicalCycle line_with_vertex(const RatVector& vertex) {
  std::vector<QuotientCell> cells;
  for (std::size_t i = 0; i < 3; ++i) cells.push_back({{vertex}, {unit_vector(3, i)}, {}, 1});
  return cycle_from_quotient({2}, 1, cells);
}

MAMeasure standard_line() { return MAMeasure(2, 1, {{QuotientVector::zero(2), 1, {0, 1, 2}}}); }

MAMeasure translated_line() {
  return MAMeasure(2, 1, {{QuotientVector(RatVector{q(2, 3), q(-1, 3), q(-1, 3)}), 1, {1, 2}}});
}

MAMeasure permuted(const MAMeasure& m, const std::vector<std::size_t>& perm) {
  std::vector<MAAtom> atoms;
  for (const auto& a : m.atoms()) {
    RatVector p(a.point.coords().size());
    for (std::size_t i = 0; i < p.size(); ++i) p[perm[i]] = a.point[i];
    QuotientVector point(p);
    atoms.push_back({point, a.mass, argmin_set(point)});
  }
  return MAMeasure(m.n(), m.dim(), atoms);
}

// Rank oracle straight from the definition.
Rat rank_oracle(const MAMeasure& m, std::uint32_t subset) {
  Rat r = 0;
  for (const auto& a : m.atoms())
    for (auto i : a.indicator)
      if (subset >> i & 1u) {
        r += a.mass;
        break;
      }
  return r;
}

}  // namespace

TEST_SUITE("measures") {
  TEST_CASE("ma_measure desk examples") {
    const MAMeasure h = ma_measure(standard_hyperplane(2));
    REQUIRE(h.atoms().size() == 1);
    CHECK(h.atoms()[0].point == QuotientVector::zero(2));
    CHECK(h.atoms()[0].mass == 1);
    CHECK(h.atoms()[0].indicator == Indicator{0, 1, 2});

    const MAMeasure t = ma_measure(translate_cycle(standard_hyperplane(2), qv({1, 0, -1})));
    REQUIRE(t.atoms().size() == 1);
    CHECK(t.atoms()[0].point == QuotientVector(RatVector{q(2, 3), q(-1, 3), q(-1, 3)}));
    CHECK(t.atoms()[0].indicator == Indicator{1, 2});

    const MAMeasure l = ma_measure(line_with_vertex({q(1, 3), q(1, 3), q(-2, 3)}));
    REQUIRE(l.atoms().size() == 1);
    CHECK(l.atoms()[0].point == QuotientVector::zero(2));
    CHECK(l.atoms()[0].indicator == Indicator{0, 1, 2});
  }

  TEST_CASE("indicator consistency is enforced") {
    CHECK_THROWS_AS(MAMeasure(2, 1, {{qv({1, 0, 0}), 1, {0}}}), std::invalid_argument);
    CHECK_THROWS_AS(MAMeasure(2, 1, {{qv({1, 0, 0}), 0, {1, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(ma_measure(cycle_from_quotient({2}, 1, {{{rv({0, 0, 0})}, {rv({1, 0, 0})}, {}, 1}})),
                    std::invalid_argument);
  }

  TEST_CASE("mass equals degree") {
    Gen g(61);
    for (int t = 0; t < 10; ++t) {
      const TropicalCycle x = corner_locus(g.full_polynomial(2, g.integer(1, 3)));
      CHECK(ma_measure(x).total_mass() == degree(x));
    }
  }

  TEST_CASE("bergman values") {
    CHECK(bergman_value({0, 1, 2}, qv({1, 0, -1})) == 1);
    CHECK(bergman_value({0, 1, 2}, QuotientVector::zero(2)) == 0);
    CHECK(bergman_value({2}, qv({1, 0, -1})) == 1);
    CHECK_THROWS(bergman_value({}, qv({1, 0, -1})));
  }
}

TEST_SUITE("polytopes and polymatroids") {
  TEST_CASE("ma_polytope desk examples") {
    const MAPolytope s = ma_polytope(standard_line());
    CHECK(s.polytope == simplex(2, {0, 1, 2}));
    for (std::uint32_t m = 1; m < 8; ++m) CHECK(s.polymatroid.rank(m) == 1);

    const MAMeasure two(1, 0, {{qv({0, 1}), 1, {0}}, {qv({1, 0}), 1, {1}}});
    const MAPolytope p = ma_polytope(two);
    CHECK(p.polytope == point_polytope(QuotientVector::zero(1)));
    CHECK(p.polymatroid.rank(1) == 1);
    CHECK(p.polymatroid.rank(2) == 1);
    CHECK(p.polymatroid.rank(3) == 2);

    CHECK(ma_polytope(translated_line()).polytope == simplex(2, {1, 2}));
  }

  TEST_CASE("polymatroid laws and the rank oracle") {
    Gen g(62);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
      const MAMeasure m = g.measure(n, static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1)),
                                    static_cast<std::size_t>(g.integer(1, 4)));
      const MAPolytope p = ma_polytope(m);
      CHECK(p.polymatroid.rank(0) == 0);
      CHECK(p.polymatroid.is_monotone());
      CHECK(p.polymatroid.is_submodular());
      for (std::uint32_t s = 0; s < (1u << (n + 1)); ++s) CHECK(p.polymatroid.rank(s) == rank_oracle(m, s));
    }
  }

  TEST_CASE("height derivative") {
    const MAMeasure line = standard_line();
    const MAPolytope p = ma_polytope(line);
    CHECK(height_derivative(line, qv({1, 0, -1}), p.polytope) == 2);
    CHECK(height_derivative(line, QuotientVector::zero(2), p.polytope) == 0);
    const MAMeasure t = translated_line();
    CHECK(height_derivative(t, qv({-2, 1, 1}), ma_polytope(t).polytope) == -2);
  }

  TEST_CASE("support identity on random measures") {
    Gen g(63);
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
      const MAMeasure m = g.measure(n, static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1)), 3);
      const Polytope p = ma_polytope(m).polytope;
      const QuotientVector lambda = g.quotient(n);
      CHECK(height_derivative(m, lambda) == Rat(static_cast<long>(m.dim() + 1)) * support_value(p, (-lambda).coords()));
    }
  }
}

TEST_SUITE("criticality") {
  TEST_CASE("standard line is critical") {
    const MAMeasure m = standard_line();
    const CriticalityReport r = is_critical(m);
    CHECK(r.critical);
    CHECK(r.lp_route);
    CHECK(r.rank_route);
    CHECK(r.routes_agree);
    CHECK(verify(r, m));
    CHECK_FALSE(r.caveat.empty());
  }

  TEST_CASE("translated line is not critical with a separating certificate") {
    const MAMeasure m = translated_line();
    const CriticalityReport r = is_critical(m);
    CHECK_FALSE(r.critical);
    REQUIRE(r.lambda.has_value());
    CHECK(*r.derivative < 0);
    for (const auto& v : r.p_ma.vertices()) CHECK(dot((-*r.lambda).coords(), v) < 0);
    CHECK(verify(r, m));
    // The particular weight (-2,1,1) also separates.
    CHECK(support_value(r.p_ma, qv({2, -1, -1}).coords()) < 0);
  }

  TEST_CASE("P^1 measure failing a rank inequality") {
    const MAMeasure m(1, 0, {{qv({0, 1}), 3, {0}}, {qv({1, 0}), 1, {1}}});
    const CriticalityReport r = is_critical(m);
    CHECK_FALSE(r.critical);
    REQUIRE(r.violated_subset.has_value());
    CHECK(*r.violated_subset == Indicator{1});
    CHECK(verify(r, m));
  }

  TEST_CASE("tampered certificates are rejected") {
    const MAMeasure m = translated_line();
    CriticalityReport r = is_critical(m);
    r.lambda = qv({2, -1, -1});
    CHECK_FALSE(verify(r, m));
    CriticalityReport c = is_critical(standard_line());
    c.coefficients = {1, 0, 0};
    CHECK_FALSE(verify(c, standard_line()));
  }

  TEST_CASE("routes agree and verdicts are permutation invariant") {
    Gen g(64);
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
      const MAMeasure m = g.measure(n, 0, static_cast<std::size_t>(g.integer(1, 5)));
      const CriticalityReport r = is_critical(m);
      CHECK(r.routes_agree);
      CHECK(verify(r, m));
      std::vector<std::size_t> perm(n + 1);
      std::iota(perm.begin(), perm.end(), 0);
      g.shuffle(perm);
      CHECK(is_critical(permuted(m, perm)).critical == r.critical);
    }
  }
}

TEST_SUITE("chow constructions") {
  TEST_CASE("chow hypersurface of H is H") {
    CHECK(equivalent(chow_hypersurface(standard_hyperplane(2)), standard_hyperplane(2)));
    CHECK_THROWS_AS(chow_hypersurface(whole_space({2})), std::invalid_argument);
  }

  TEST_CASE("points give reflected hyperplanes") {
    const QuotientVector p = qv({2, 0, 1});
    const TropicalCycle c = chow_hypersurface(point_cycle(p, 2));
    CHECK(equivalent(c, scale(translate_cycle(reflect_cycle(standard_hyperplane(2)), p), 2)));
  }

  TEST_CASE("translation equivariance and balancing") {
    Gen g(65);
    for (int t = 0; t < 5; ++t) {
      const TropicalCycle x = corner_locus(g.full_polynomial(3, 1));
      const TropicalCycle curve = stable_intersection(x, corner_locus(g.full_polynomial(3, 1)));
      const QuotientVector tau = g.quotient(3);
      const TropicalCycle c = chow_hypersurface(curve);
      CHECK(is_balanced(c).balanced);
      CHECK(equivalent(chow_hypersurface(translate_cycle(curve, tau)), translate_cycle(c, tau)));
    }
  }

  TEST_CASE("multi-diagonal version") {
    const TropicalCycle m = chow_multi(standard_hyperplane(2));
    CHECK(m.dim() == 3);
    CHECK(m.factors() == std::vector<std::size_t>{2, 2});
    CHECK(is_balanced(m).balanced);
    CHECK_THROWS_AS(chow_multi(standard_hyperplane(4)), std::invalid_argument);
  }
}

TEST_SUITE("green evaluation") {
  TEST_CASE("calibration values") {
    const TropicalCycle h = standard_hyperplane(2);
    CHECK(chow_green_eval(h, QuotientVector::zero(2)) == 0);
    CHECK(chow_green_eval(h, qv({1, 0, -1})) == q(-1, 3));
    CHECK(chow_green_eval(h, qv({2, -1, -1})) == 0);
  }

  TEST_CASE("positively homogeneous on fans") {
    Gen g(66);
    for (int t = 0; t < 10; ++t) {
      const TropicalCycle x = corner_locus(g.fan_polynomial(2, g.integer(1, 2)));
      const QuotientVector s = g.quotient(2);
      CHECK(chow_green_eval(x, s * Rat(2)) == 2 * chow_green_eval(x, s));
    }
  }

  TEST_CASE("residual chow polytope") {
    const Polytope r = residual_chow_polytope(standard_line());
    CHECK(r == convex_hull(std::vector<QuotientVector>{QuotientVector::basis(2, 0) * Rat(-2),
                                                        QuotientVector::basis(2, 1) * Rat(-2),
                                                        QuotientVector::basis(2, 2) * Rat(-2)},
                           2));
    const MAMeasure pt(2, 0, {{QuotientVector::zero(2), 1, {0, 1, 2}}});
    CHECK(residual_chow_polytope(pt) == reflect(simplex(2, {0, 1, 2})));
    Gen g(67);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
      const MAMeasure m = g.measure(n, static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1)), 3);
      const RatVector origin = QuotientVector::zero(n).coords();
      CHECK(contains(residual_chow_polytope(m), origin) == contains(ma_polytope(m).polytope, origin));
    }
  }
}

TEST_SUITE("point configurations") {
  TEST_CASE("desk cross-checks") {
    const D0Report one = d0_crosscheck(PointConfiguration{2, {{rv({0, 0, 0}), 1}}});
    CHECK(one.consistent());
    CHECK(one.residual == simplex(2, {0, 1, 2}));
    CHECK(one.criticality.critical);

    const D0Report two = d0_crosscheck(PointConfiguration{1, {{rv({0, 1}), 1}, {rv({1, 0}), 1}}});
    CHECK(two.consistent());
    CHECK(two.ma == point_polytope(QuotientVector::zero(1)));
    CHECK(two.criticality.critical);

    const D0Report three = d0_crosscheck(PointConfiguration{1, {{rv({0, 1}), 1}, {rv({0, 2}), 1}, {rv({0, 3}), 1}}});
    CHECK(three.consistent());
    CHECK_FALSE(three.criticality.critical);
    CHECK_FALSE(three.torus_minimal);
  }

  TEST_CASE("random configurations") {
    Gen g(68);
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 2));
      const D0Report r = d0_crosscheck(g.configuration(n, static_cast<std::size_t>(g.integer(1, 3)), 3));
      CHECK_MESSAGE(r.consistent(), r.diff);
    }
  }

  TEST_CASE("rational multiplicities are scaled") {
    const D0Report r = d0_crosscheck(PointConfiguration{1, {{rv({0, 1}), q(1, 2)}, {rv({1, 0}), q(1, 3)}}});
    CHECK(r.scale == 6);
    CHECK(r.consistent());
  }
}
