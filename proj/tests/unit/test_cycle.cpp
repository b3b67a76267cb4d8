#include "generators.hpp"

#include "tropcrit/cycle/balancing.hpp"
#include "tropcrit/cycle/cycle.hpp"
#include "tropcrit/cycle/intersection.hpp"
#include "tropcrit/pl/polynomial.hpp"

#include <doctest.h>

using namespace tropcrit;
using tropcrit::testing::Gen;

namespace {

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Rat q(long p, long d = 1) { return Rat(p) / Rat(d); }

// One-dimensional cycle: rays from a common vertex, in sum-zero coordinates.
TropicalCycle star(const RatVector& vertex, const std::vector<std::pair<RatVector, Rat>>& rays) {
  std::vector<QuotientCell> cells;
  for (const auto& [dir, w] : rays) cells.push_back({{vertex}, {dir}, {}, w});
  return cycle_from_quotient({vertex.size() - 1}, 1, cells);
}

TropicalCycle line_with_vertex(const RatVector& vertex) {
  return star(vertex, {{rv({1, 0, 0}), 1}, {rv({0, 1, 0}), 1}, {rv({0, 0, 1}), 1}});
}

Rat mass(const TropicalCycle& zero_dim) { return total_mass(to_zero_cycle(zero_dim)); }

// Projection of a product ambient onto its first block, in chart coordinates.
IntMatrix first_block(std::size_t n1, std::size_t n2) {
  IntMatrix m(n1, n1 + n2);
  for (std::size_t i = 0; i < n1; ++i) m(i, i) = 1;
  return m;
}

}  // namespace

TEST_SUITE("balancing") {
  TEST_CASE("standard hyperplane is balanced") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(is_balanced(standard_hyperplane(n)).balanced);
  }

  TEST_CASE("a single ray is not balanced and reports its direction") {
    const BalanceReport r = is_balanced(star(rv({0, 0, 0}), {{rv({1, 0, 0}), 1}}));
    CHECK_FALSE(r.balanced);
    REQUIRE(r.face.has_value());
    CHECK(r.face->points() == RatMatrix{rv({0, 0})});
    CHECK(r.defect_quotient == canonical_rep(rv({1, 0, 0})).coords());
  }

  TEST_CASE("weights matter") {
    CHECK_FALSE(is_balanced(star(rv({0, 0, 0}), {{rv({1, 0, 0}), 2}, {rv({0, 1, 0}), 1}, {rv({0, 0, 1}), 1}})).balanced);
    CHECK(is_balanced(star(rv({0, 0, 0}), {{rv({1, 0, 0}), 2}, {rv({0, 1, 0}), 2}, {rv({0, 0, 1}), 2}})).balanced);
    // A full line through the origin.
    CHECK(is_balanced(star(rv({0, 0, 0}), {{rv({1, 0, 0}), 1}, {rv({-1, 0, 0}), 1}})).balanced);
  }

  TEST_CASE("structural errors are distinct from imbalance") {
    CHECK_THROWS_AS(TropicalCycle::in_projective(
                        2, 1, {{Polyhedron::from_generators(2, {rv({0, 0})}, {rv({1, 0}), rv({0, 1})}, {}), 1}}),
                    StructuralError);
    // Two overlapping cells of the same span that do not share a face.
    const TropicalCycle overlap = TropicalCycle::in_projective(
        1, 1,
        {{Polyhedron::from_generators(1, {rv({0}), rv({2})}, {}, {}), 1},
         {Polyhedron::from_generators(1, {rv({1}), rv({3})}, {}, {}), 1}});
    CHECK_THROWS_AS(is_balanced(overlap), StructuralError);
  }

  TEST_CASE("corner loci of random degree-two polynomials are balanced") {
    Gen g(21);
    for (int t = 0; t < 20; ++t) CHECK(is_balanced(corner_locus(g.full_polynomial(2, 2))).balanced);
  }

  TEST_CASE("primitive normal is the lattice generator") {
    const Polyhedron seg = Polyhedron::from_generators(2, {rv({0, 0}), rv({2, 4})}, {}, {});
    const Polyhedron end = Polyhedron::point(rv({0, 0}));
    CHECK(primitive_normal(seg, end) == rv({1, 2}));
  }
}

TEST_SUITE("constructors") {
  TEST_CASE("skeleta") {
    const TropicalCycle h = standard_hyperplane(2);
    CHECK(h == skeleton(2, 0));
    CHECK(h.cells().size() == 3);
    for (const auto& c : h.cells()) CHECK(c.weight == 1);
    CHECK(skeleton(2, 1) == point_cycle(QuotientVector::zero(2)));
    CHECK_THROWS(skeleton(2, 2));
    CHECK(skeleton(4, 1).cells().size() == 10);
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t l = 0; l < n; ++l) CHECK(is_balanced(skeleton(n, l)).balanced);
  }

  TEST_CASE("repeated self intersection of H gives the skeleta") {
    for (std::size_t n = 2; n <= 4; ++n) {
      TropicalCycle acc = standard_hyperplane(n);
      for (std::size_t l = 1; l < n; ++l) {
        acc = stable_intersection(acc, standard_hyperplane(n));
        CHECK(equivalent(acc, skeleton(n, l)));
      }
    }
  }

  TEST_CASE("translation and reflection") {
    const QuotientVector tau = canonical_rep(rv({1, 0, -1}));
    const TropicalCycle t = translate_cycle(standard_hyperplane(2), tau);
    for (const auto& c : quotient_cells(t)) CHECK(c.vertices == RatMatrix{tau.coords()});
    CHECK(is_balanced(t).balanced);
    Gen g(22);
    for (int i = 0; i < 10; ++i) {
      const TropicalCycle c = corner_locus(g.full_polynomial(2, 2));
      CHECK(reflect_cycle(reflect_cycle(c)) == c);
      CHECK(is_balanced(reflect_cycle(c)).balanced);
    }
    // -max(a) = min(-a_i): exponents -e_i.
    const TropicalPolynomial neg_max(2, {{{Int(-1), Int(0), Int(0)}, 0},
                                         {{Int(0), Int(-1), Int(0)}, 0},
                                         {{Int(0), Int(0), Int(-1)}, 0}});
    CHECK(equivalent(reflect_cycle(standard_hyperplane(2)), corner_locus(neg_max)));
  }
}

TEST_SUITE("stable intersection") {
  TEST_CASE("desk examples") {
    const TropicalCycle h = standard_hyperplane(2);
    CHECK(stable_intersection(h, h) == point_cycle(QuotientVector::zero(2)));
    const TropicalCycle shifted = translate_cycle(h, canonical_rep(rv({1, 0, -1})));
    CHECK(stable_intersection(h, shifted) == point_cycle(QuotientVector(RatVector{q(2, 3), q(-1, 3), q(-1, 3)})));
    const TropicalCycle line = line_with_vertex({q(1, 3), q(1, 3), q(-2, 3)});
    CHECK(stable_intersection(line, h) == point_cycle(QuotientVector::zero(2)));
  }

  TEST_CASE("degree examples") {
    CHECK(degree(standard_hyperplane(2)) == 1);
    CHECK(degree(standard_hyperplane(4)) == 1);
    CHECK(mass(stable_intersection(standard_hyperplane(2), standard_hyperplane(2))) == 1);
    Gen g(23);
    for (int t = 0; t < 5; ++t) CHECK(degree(corner_locus(g.full_polynomial(2, 2))) == 2);
  }

  TEST_CASE("empty results") {
    const TropicalCycle p = point_cycle(QuotientVector::zero(2));
    const TropicalCycle r = stable_intersection(p, p);
    CHECK(r.empty());
    CHECK(r.dim() == 0);
  }

  TEST_CASE("commutative, translation invariant degree, thread independent") {
    Gen g(24);
    for (int t = 0; t < 12; ++t) {
      const TropicalCycle a = corner_locus(g.full_polynomial(2, g.integer(1, 2)));
      const TropicalCycle b = corner_locus(g.full_polynomial(2, g.integer(1, 2)));
      const TropicalCycle ab = stable_intersection(a, b);
      CHECK(ab == stable_intersection(b, a));
      IntersectionOptions threaded;
      threaded.threads = 3;
      CHECK(ab == stable_intersection(a, b, threaded));
      CHECK(degree(translate_cycle(a, g.quotient(2))) == degree(a));
      CHECK(is_balanced(ab).balanced);
    }
  }

  TEST_CASE("associative on surfaces in P^3") {
    Gen g(25);
    for (int t = 0; t < 3; ++t) {
      const TropicalCycle a = corner_locus(g.full_polynomial(3, 1));
      const TropicalCycle b = corner_locus(g.full_polynomial(3, 1));
      const TropicalCycle c = corner_locus(g.full_polynomial(3, 2));
      const TropicalCycle left = stable_intersection(stable_intersection(a, b), c);
      const TropicalCycle right = stable_intersection(a, stable_intersection(b, c));
      CHECK(equivalent(left, right));
      CHECK(mass(left) == 2);
    }
  }

  TEST_CASE("projection formula for the diagonal and a coordinate projection") {
    Gen g(26);
    for (int t = 0; t < 5; ++t) {
      const TropicalCycle c = corner_locus(g.full_polynomial(2, g.integer(1, 2)));
      const TropicalCycle x = corner_locus(g.full_polynomial(2, g.integer(1, 2)));
      // pi_*(pi^* C . Delta_* X) = C . pi_* Delta_* X = C . X
      const TropicalCycle pulled = cross(c, whole_space({2}));
      const TropicalCycle lhs =
          linear_pushforward(stable_intersection(pulled, diagonal_pushforward(x, 2)), first_block(2, 2), {2});
      const TropicalCycle rhs = stable_intersection(c, linear_pushforward(diagonal_pushforward(x, 2), first_block(2, 2), {2}));
      CHECK(equivalent(lhs, rhs));
      CHECK(equivalent(rhs, stable_intersection(c, x)));
    }
  }
}

TEST_SUITE("products and pushforwards") {
  TEST_CASE("cross of hyperplanes") {
    const TropicalCycle c = cross(standard_hyperplane(2), standard_hyperplane(2));
    CHECK(c.dim() == 2);
    CHECK(c.ambient_dim() == 4);
    CHECK(is_balanced(c).balanced);
  }

  TEST_CASE("identity pushforward") {
    Gen g(27);
    const TropicalCycle a = corner_locus(g.full_polynomial(2, 2));
    CHECK(equivalent(linear_pushforward(a, IntMatrix::identity(2), {2}), a));
  }

  TEST_CASE("sum pushforward of A x {p} is A + p") {
    Gen g(28);
    for (int t = 0; t < 5; ++t) {
      const TropicalCycle a = corner_locus(g.full_polynomial(2, 2));
      const QuotientVector p = g.quotient(2);
      IntMatrix sum_map(2, 4);
      for (std::size_t i = 0; i < 2; ++i) sum_map(i, i) = sum_map(i, i + 2) = 1;
      const TropicalCycle pushed = linear_pushforward(cross(a, point_cycle(p)), sum_map, {2});
      CHECK(equivalent(pushed, translate_cycle(a, p)));
    }
  }

  TEST_CASE("lattice index weights in pushforwards") {
    // Doubling map on P^1 charts: a ray of weight 1 goes to a ray of weight 2.
    const TropicalCycle line = whole_space({1});
    IntMatrix twice{{2}};
    const TropicalCycle img = linear_pushforward(line, twice, {1});
    REQUIRE(img.cells().size() == 1);
    CHECK(img.cells()[0].weight == 2);
    // Collapsing map drops the cells.
    IntMatrix zero(1, 1);
    CHECK(linear_pushforward(line, zero, {1}).empty());
  }
}

TEST_SUITE("convolution") {
  TEST_CASE("desk examples") {
    Gen g(29);
    for (std::size_t n = 2; n <= 3; ++n) {
      const TropicalCycle a = corner_locus(g.full_polynomial(n, 2));
      CHECK(equivalent(minkowski_convolve(a, skeleton(n, n - 1), -1), a));
    }
    const QuotientVector p = g.quotient(2), r = g.quotient(2);
    CHECK(minkowski_convolve(point_cycle(p, 2), point_cycle(r, 3), 1) == point_cycle(p + r, 6));
    CHECK(minkowski_convolve(point_cycle(p, 2), point_cycle(r, 3), -1) == point_cycle(p - r, 6));
    CHECK(equivalent(minkowski_convolve(standard_hyperplane(2), point_cycle(r), 1),
                     translate_cycle(standard_hyperplane(2), r)));
  }

  TEST_CASE("difference with a point reflects") {
    const QuotientVector p = canonical_rep(rv({1, 0, 0}));
    CHECK(equivalent(minkowski_convolve(point_cycle(p), standard_hyperplane(2), -1),
                     translate_cycle(reflect_cycle(standard_hyperplane(2)), p)));
  }

  TEST_CASE("oversized convolutions are empty") {
    const TropicalCycle hh = minkowski_convolve(standard_hyperplane(2), standard_hyperplane(2), 1);
    CHECK(hh.dim() == 2);
    CHECK(is_balanced(hh).balanced);
    const TropicalCycle big = minkowski_convolve(whole_space({2}), standard_hyperplane(2), 1);
    CHECK(big.empty());
  }

  TEST_CASE("outputs are balanced") {
    Gen g(30);
    for (int t = 0; t < 8; ++t) {
      const TropicalCycle a = corner_locus(g.full_polynomial(3, 1));
      const TropicalCycle b = stable_intersection(corner_locus(g.full_polynomial(3, 1)), corner_locus(g.full_polynomial(3, 1)));
      CHECK(is_balanced(minkowski_convolve(b, skeleton(3, 1), g.coin() ? 1 : -1)).balanced);
      CHECK(is_balanced(minkowski_convolve(a, point_cycle(g.quotient(3)), -1)).balanced);
    }
  }
}

TEST_SUITE("normal forms") {
  TEST_CASE("refine and normalize preserve the cycle") {
    // A segment split in two pieces equals the unsplit segment.
    const auto seg = [](long a, long b) { return Polyhedron::from_generators(1, {rv({a}), rv({b})}, {}, {}); };
    const TropicalCycle split = TropicalCycle::in_projective(1, 1, {{seg(0, 1), 1}, {seg(1, 2), 1}});
    const TropicalCycle whole = TropicalCycle::in_projective(1, 1, {{seg(0, 2), 1}});
    CHECK(equivalent(split, whole));
    CHECK(normalize(split) == whole);
    CHECK_FALSE(equivalent(split, scale(whole, 2)));
    CHECK(add(whole, scale(whole, -1)).empty());
  }

  TEST_CASE("zero cycles merge equal points") {
    const QuotientVector p = canonical_rep(rv({1, 2, 3}));
    const ZeroCycle z({{p, 1}, {p, 2}, {QuotientVector::zero(2), 0}});
    REQUIRE(z.atoms().size() == 1);
    CHECK(z.atoms()[0].multiplicity == 3);
  }
}
