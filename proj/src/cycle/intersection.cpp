#include "tropcrit/cycle/intersection.hpp"

#include <atomic>
#include <optional>
#include <thread>

namespace tropcrit {

namespace {

constexpr int kMaxDisplacements = 64;

// Points on the moment curve; the t-th vector is (1, t, t^2, ...) with
// alternating signs so that no coordinate pattern repeats across blocks.
RatVector displacement(std::size_t D, int t) {
  RatVector v(D);
  Rat x = 1;
  for (std::size_t i = 0; i < D; ++i) {
    v[i] = (i % 2 == 0) ? x : Rat(-x);
    x *= t + 2;
  }
  return v;
}

std::vector<IntVector> integer_rows(const RatMatrix& rows) {
  std::vector<IntVector> out;
  for (const auto& r : rows) out.push_back(to_int_vector(primitive_direction(r)));
  return out;
}

enum class Outcome { none, contributes, degenerate };

Outcome examine(const Polyhedron& s, const Polyhedron& t, int k, const RatVector& v, Polyhedron& meet) {
  const std::size_t D = s.ambient();
  RatMatrix span = s.direction_space().rows;
  span.insert(span.end(), t.direction_space().rows.begin(), t.direction_space().rows.end());
  const RowEchelon sum = rref(span, D);
  if (sum.rows.size() < D) {
    if (!in_row_space(v, sum)) return Outcome::none;
    return s.intersect(t).is_empty() ? Outcome::none : Outcome::degenerate;
  }
  meet = s.intersect(t);
  if (meet.dim() != k) return Outcome::none;

  // Tangent cone of s - t at 0; the pair survives iff v is interior to it.
  RatMatrix rays, lin = s.lineality();
  lin.insert(lin.end(), t.lineality().begin(), t.lineality().end());
  for (const auto& p : s.points())
    for (const auto& q : t.points()) {
      RatVector d = sub(p, q);
      if (!is_zero(d)) rays.push_back(std::move(d));
    }
  for (const auto& r : s.rays()) rays.push_back(r);
  for (const auto& r : t.rays()) rays.push_back(negated(r));
  const Polyhedron cone = Polyhedron::from_generators(D, {zeros(D)}, rays, lin);
  for (const auto& h : cone.inequalities()) {
    const Rat val = dot(h.normal, v);
    if (val.is_zero()) return Outcome::degenerate;
    if (val < 0) return Outcome::none;
  }
  return Outcome::contributes;
}

std::optional<TropicalCycle> displaced(const TropicalCycle& a, const TropicalCycle& b, int k, const RatVector& v,
                                       std::size_t threads) {
  const std::size_t na = a.cells().size(), nb = b.cells().size();
  const std::size_t pairs = na * nb;
  std::vector<std::optional<WeightedCell>> found(pairs);
  std::atomic<bool> degenerate{false};

  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t idx = start; idx < pairs && !degenerate.load(); idx += stride) {
      const WeightedCell& s = a.cells()[idx / nb];
      const WeightedCell& t = b.cells()[idx % nb];
      Polyhedron meet;
      const Outcome o = examine(s.cell, t.cell, k, v, meet);
      if (o == Outcome::degenerate) {
        degenerate = true;
        return;
      }
      if (o != Outcome::contributes) continue;
      const auto index = lattice_index(integer_rows(s.cell.direction_space().rows),
                                       integer_rows(t.cell.direction_space().rows), a.ambient_dim());
      found[idx] = WeightedCell{std::move(meet), s.weight * t.weight * Rat(*index)};
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, pairs));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& th : pool) th.join();
  }
  if (degenerate) return std::nullopt;

  std::vector<WeightedCell> cells;
  for (auto& f : found)
    if (f) cells.push_back(std::move(*f));
  return refine(TropicalCycle(a.factors(), k, std::move(cells)));
}

}  // namespace

TropicalCycle stable_intersection(const TropicalCycle& a, const TropicalCycle& b, const IntersectionOptions& options) {
  if (a.factors() != b.factors()) throw std::invalid_argument("stable_intersection: ambient mismatch");
  const std::size_t D = a.ambient_dim();
  const int k = a.dim() + b.dim() - static_cast<int>(D);
  if (k < 0) return TropicalCycle(a.factors(), 0, {});
  if (a.empty() || b.empty()) return TropicalCycle(a.factors(), k, {});

  std::optional<TropicalCycle> first;
  for (int t = 0; t < kMaxDisplacements; ++t) {
    auto result = displaced(a, b, k, displacement(D, t), options.threads);
    if (!result) continue;
    if (!first) {
      first = std::move(result);
      if (!options.verify) return *first;
      continue;
    }
    if (!equivalent(*first, *result))
      throw InvariantViolation("stable_intersection: displacements disagree (" + to_string(*first) + " vs " +
                               to_string(*result) + "); are the inputs balanced?");
    return *first;
  }
  throw InvariantViolation("stable_intersection: no generic displacement found");
}

Rat degree(const TropicalCycle& c, const IntersectionOptions& options) {
  const std::size_t n = c.n();
  Rat mass = 0;
  if (c.dim() == 0) {
    for (const auto& wc : c.cells()) mass += wc.weight;
    return mass;
  }
  const TropicalCycle z = stable_intersection(c, skeleton(n, static_cast<std::size_t>(c.dim() - 1)), options);
  for (const auto& wc : z.cells()) mass += wc.weight;
  return mass;
}

}  // namespace tropcrit
