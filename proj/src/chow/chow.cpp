#include "tropcrit/chow/chow.hpp"

#include <algorithm>

namespace tropcrit {

TropicalCycle chow_hypersurface(const TropicalCycle& x) {
  const std::size_t n = x.n();
  const std::size_t d = static_cast<std::size_t>(x.dim());
  if (d + 1 > n) throw std::invalid_argument("chow_hypersurface: need dim X + 1 <= n");
  return minkowski_convolve(x, skeleton(n, d), -1);
}

TropicalCycle chow_multi(const TropicalCycle& x) {
  const std::size_t n = x.n();
  const std::size_t copies = static_cast<std::size_t>(x.dim()) + 1;
  if (n * copies > 8)
    throw std::invalid_argument("chow_multi: product ambient n(d+1) = " + std::to_string(n * copies) +
                                " exceeds 8");
  TropicalCycle hyperplanes = standard_hyperplane(n);
  for (std::size_t k = 1; k < copies; ++k) hyperplanes = cross(hyperplanes, standard_hyperplane(n));
  return minkowski_convolve(diagonal_pushforward(x, copies), hyperplanes, -1);
}

Rat chow_green_eval(const TropicalCycle& x, const QuotientVector& tau, const IntersectionOptions& options) {
  const std::size_t n = x.n();
  if (tau.n() != n) throw std::invalid_argument("chow_green_eval: ambient mismatch");
  const TropicalCycle fiber =
      x.dim() == 0
          ? x
          : stable_intersection(x, translate_cycle(skeleton(n, static_cast<std::size_t>(x.dim() - 1)), tau), options);
  Rat total = 0;
  const ZeroCycle points = to_zero_cycle(fiber);
  for (const auto& a : points.atoms()) {
    const QuotientVector shifted = a.point - tau;
    total += a.multiplicity * *std::min_element(shifted.coords().begin(), shifted.coords().end());
  }
  return total;
}

Polytope residual_chow_polytope(const MAMeasure& m) {
  return reflect(dilate(ma_polytope(m).polytope, Rat(static_cast<long>(m.dim() + 1))));
}

MAMeasure config_measure(const PointConfiguration& c) {
  validate(c);
  std::vector<MAAtom> atoms;
  for (const auto& p : c.points) {
    QuotientVector point = canonical_rep(p.valuations);
    Indicator ind = argmin_set(point);
    atoms.push_back({std::move(point), p.multiplicity, std::move(ind)});
  }
  return MAMeasure(c.n, 0, std::move(atoms));
}

D0Report d0_crosscheck(const PointConfiguration& c) {
  D0Report r;
  const ChowPolynomial chow = point_config_chow(c);
  r.scale = chow.scale;
  r.residual = residual_polytope(chow.polynomial);
  r.torus_minimal = torus_minimal(chow.polynomial);

  const MAMeasure m = config_measure(c);
  r.criticality = is_critical(m);
  r.ma = r.criticality.p_ma;

  r.polytopes_equal = r.residual == dilate(r.ma, Rat(r.scale));
  r.verdicts_equal = r.torus_minimal == r.criticality.critical;
  auto list = [](const Polytope& p) {
    std::string s;
    for (const auto& v : p.vertices()) s += " " + to_string(v);
    return s;
  };
  if (!r.polytopes_equal)
    r.diff += "residual polytope {" + list(r.residual) + " } != " + to_string(r.scale) + " * P_MA {" + list(r.ma) +
              " }\n";
  if (!r.verdicts_equal)
    r.diff += std::string("torus_minimal = ") + (r.torus_minimal ? "true" : "false") +
              " but is_critical = " + (r.criticality.critical ? "true" : "false") + "\n";
  return r;
}

}  // namespace tropcrit
