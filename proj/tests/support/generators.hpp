#pragma once

// Seeded random generators for property tests.

#include "tropcrit/chow/measure.hpp"
#include "tropcrit/pl/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace tropcrit::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// p/q with |p| <= bound·q and 1 <= q <= max_den.
  Rat rational(long bound = 3, long max_den = 4) {
    const long q = integer(1, max_den);
    return Rat(integer(-bound * q, bound * q)) / Rat(q);
  }
  Rat positive(long bound = 3, long max_den = 4) {
    const long q = integer(1, max_den);
    return Rat(integer(1, bound * q)) / Rat(q);
  }

  RatVector vector(std::size_t len, long bound = 3, long max_den = 4) {
    RatVector v;
    for (std::size_t i = 0; i < len; ++i) v.push_back(rational(bound, max_den));
    return v;
  }
  QuotientVector quotient(std::size_t n, long bound = 3, long max_den = 4) {
    return canonical_rep(vector(n + 1, bound, max_den));
  }

  /// Nonempty subset of {0..n}, sorted.
  Indicator subset(std::size_t n) {
    Indicator s;
    while (s.empty())
      for (std::size_t i = 0; i <= n; ++i)
        if (coin()) s.push_back(i);
    return s;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

  /// Homogeneous polynomial of degree d in n+1 variables that contains the
  /// pure powers d·e_i (so its Newton polytope is the full dilated simplex)
  /// plus a random selection of the other exponents.
  TropicalPolynomial full_polynomial(std::size_t n, long d, long bound = 3, long max_den = 2) {
    std::vector<Term> terms;
    IntVector e(n + 1, Int(0));
    enumerate(n, d, 0, e, [&](const IntVector& exponent) {
      const bool pure = std::count(exponent.begin(), exponent.end(), Int(d)) == 1;
      if (pure || coin()) terms.push_back({exponent, rational(bound, max_den)});
    });
    return TropicalPolynomial(n, std::move(terms));
  }

  /// Like full_polynomial but with all valuations zero, so the corner locus
  /// is a fan through the origin.
  TropicalPolynomial fan_polynomial(std::size_t n, long d) {
    std::vector<Term> terms;
    IntVector e(n + 1, Int(0));
    enumerate(n, d, 0, e, [&](const IntVector& exponent) {
      const bool pure = std::count(exponent.begin(), exponent.end(), Int(d)) == 1;
      if (pure || coin()) terms.push_back({exponent, Rat(0)});
    });
    return TropicalPolynomial(n, std::move(terms));
  }

  /// Measure with random atoms: argmin coordinates 0, the rest positive.
  MAMeasure measure(std::size_t n, std::size_t dim, std::size_t atoms) {
    std::vector<MAAtom> out;
    for (std::size_t k = 0; k < atoms; ++k) {
      const Indicator ind = subset(n);
      RatVector v(n + 1);
      for (std::size_t i = 0; i <= n; ++i)
        v[i] = std::binary_search(ind.begin(), ind.end(), i) ? Rat(0) : positive(3, 3);
      QuotientVector p = canonical_rep(v);
      out.push_back({p, positive(3, 3), argmin_set(p)});
    }
    return MAMeasure(n, dim, std::move(out));
  }

  PointConfiguration configuration(std::size_t n, std::size_t points, long max_multiplicity = 4) {
    PointConfiguration c;
    c.n = n;
    for (std::size_t k = 0; k < points; ++k)
      c.points.push_back({vector(n + 1, 2, 3), Rat(integer(1, max_multiplicity))});
    return c;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  template <class F>
  static void enumerate(std::size_t n, long left, std::size_t i, IntVector& e, F&& f) {
    if (i == n) {
      e[i] = left;
      f(e);
      return;
    }
    for (long k = 0; k <= left; ++k) {
      e[i] = k;
      enumerate(n, left - k, i + 1, e, f);
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace tropcrit::testing
