#include "tropcrit/chow/criticality.hpp"

#include "tropcrit/geometry/errors.hpp"

namespace tropcrit {

namespace {

std::optional<Indicator> rank_violation(const Polymatroid& pm) {
  const std::size_t ground = pm.ground();
  const Rat& delta = pm.total();
  const std::uint32_t full = (1u << ground) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    Indicator subset;
    for (std::size_t i = 0; i < ground; ++i)
      if (s >> i & 1u) subset.push_back(i);
    if (delta * Rat(static_cast<long>(subset.size())) / Rat(static_cast<long>(ground)) > pm.rank(s)) return subset;
  }
  return std::nullopt;
}

}  // namespace

CriticalityReport is_critical(const MAMeasure& m) {
  const std::size_t n = m.n();
  const MAPolytope pm = ma_polytope(m);
  CriticalityReport r;
  r.p_ma = pm.polytope;

  const MembershipCertificate cert = membership(pm.polytope, QuotientVector::zero(n).coords());
  r.lp_route = cert.member;
  r.violated_subset = rank_violation(pm.polymatroid);
  r.rank_route = !r.violated_subset.has_value();
  r.routes_agree = r.lp_route == r.rank_route;
  if (!r.routes_agree)
    throw InvariantViolation(std::string("is_critical: LP route says ") + (r.lp_route ? "critical" : "not critical") +
                             " but the rank route disagrees");
  r.critical = r.lp_route;
  if (r.critical) {
    r.coefficients = cert.coefficients;
  } else {
    r.lambda = QuotientVector(cert.separator);
    r.derivative = height_derivative(m, *r.lambda, pm.polytope);
  }
  return r;
}

bool verify(const CriticalityReport& r, const MAMeasure& m) {
  const std::size_t n = m.n();
  const RatVector origin = QuotientVector::zero(n).coords();
  const MAPolytope pm = ma_polytope(m);
  if (r.p_ma != pm.polytope) return false;
  if (r.critical) {
    MembershipCertificate c;
    c.member = true;
    c.coefficients = r.coefficients;
    return r.lp_route && r.rank_route && verify_membership(r.p_ma, origin, c);
  }
  if (!r.lambda || !r.derivative || !r.violated_subset) return false;
  for (const auto& v : r.p_ma.vertices())
    if (dot(r.lambda->coords(), v) <= 0) return false;
  if (height_derivative(m, *r.lambda) != *r.derivative || *r.derivative >= 0) return false;

  std::uint32_t mask = 0;
  for (auto i : *r.violated_subset) mask |= 1u << i;
  return pm.polymatroid.total() * Rat(static_cast<long>(r.violated_subset->size())) / Rat(static_cast<long>(n + 1)) >
         pm.polymatroid.rank(mask);
}

}  // namespace tropcrit
