#include "symspace/spaces.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "symspace/error.hpp"
#include "symspace/linalg.hpp"

namespace symspace {

SpacePoint base_point(const SeriesEntry& e) { return {e.id(), e.params, e.q1, e.q2}; }

SpacePoint make_point(const SeriesEntry& e, Subspace q1, Subspace q2) { return {e.id(), e.params, std::move(q1), std::move(q2)}; }

namespace {

bool isotropic_half(const Form& b, const Subspace& u) { return 2 * u.dim() == b.dim() && is_isotropic(b, u); }

void require_ambient(const SeriesEntry& e, const Subspace& u) {
  if (u.ambient_dim() != e.dim || (u.dim() > 0 && u.ring() != e.ring))
    throw Error(ErrorKind::DimensionMismatch, "subspace does not live in the entry's space");
}

}  // namespace

bool membership(const SeriesEntry& e, const Subspace& q1, const Subspace& q2) {
  require_ambient(e, q1);
  require_ambient(e, q2);
  if (!is_direct_complement(q1, q2)) return false;
  switch (e.list()) {
    case 1: return isotropic_half(*e.b, q1) && isotropic_half(*e.b, q2) && e.j->apply(q1) == q2;
    case 2: return isotropic_half(*e.b, q1) && isotropic_half(*e.b, q2);
    case 3: return e.j->apply(q1) == q2;
    case 4:
      return q1.dim() == e.m && is_invertible(restricted_gram(*e.d, q1.basis())) && orthogonal_complement(*e.d, q1) == q2;
    default: return q1.dim() == e.m;
  }
}

bool membership(const SeriesEntry& e, const SpacePoint& pt) { return pt.entry == e.id() && membership(e, pt.q1, pt.q2); }

SpacePoint act(const SeriesEntry& e, const Matrix& g, const SpacePoint& pt) {
  if (g.rows() != e.dim || !in_group(e.g, g)) throw Error(ErrorKind::NotInGroup, "g is not in G");
  return make_point(e, image(g, pt.q1), image(g, pt.q2));
}

Inertia component_index(const SeriesEntry& e, const SpacePoint& pt) {
  if (!e.star()) throw Error(ErrorKind::NotStar, "series " + std::to_string(e.id()) + " is not a ★ series");
  const Form restricted(e.d->type(), restricted_gram(*e.d, pt.q1.basis()));
  return inertia(restricted);
}

std::vector<Inertia> component_range(const SeriesEntry& e) {
  if (!e.star()) throw Error(ErrorKind::NotStar, "series " + std::to_string(e.id()) + " is not a ★ series");
  std::vector<Inertia> out;
  if (e.list() == 1) {
    for (std::size_t p = 0; p <= e.m; ++p) out.push_back({p, e.m - p});
    return out;
  }
  const std::size_t p = static_cast<std::size_t>(*e.params.p), q = static_cast<std::size_t>(*e.params.q);
  for (std::size_t r = 0; r <= std::min(p, e.m); ++r)
    if (e.m - r <= q) out.push_back({r, e.m - r});
  return out;
}

std::vector<SpacePoint> component_points(const SeriesEntry& e) {
  std::map<Inertia, SpacePoint> found;
  if (!e.star()) throw Error(ErrorKind::NotStar, "series " + std::to_string(e.id()) + " is not a ★ series");
  if (e.list() == 1) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << e.m); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < e.m; ++k) idx.push_back((mask >> k) & 1 ? e.m + k : k);
      const Subspace q1 = Subspace::coordinate(e.ring, e.dim, idx);
      SpacePoint pt = make_point(e, q1, e.j->apply(q1));
      found.emplace(component_index(e, pt), std::move(pt));
    }
  } else {
    const std::size_t p = static_cast<std::size_t>(*e.params.p);
    for (const Inertia& label : component_range(e)) {
      std::vector<std::size_t> idx;
      for (std::size_t t = 0; t < label.positive; ++t) idx.push_back(t);
      for (std::size_t t = 0; t < label.negative; ++t) idx.push_back(p + t);
      const Subspace q1 = Subspace::coordinate(e.ring, e.dim, idx);
      SpacePoint pt = make_point(e, q1, orthogonal_complement(*e.d, q1));
      found.emplace(component_index(e, pt), std::move(pt));
    }
  }
  std::vector<SpacePoint> out;
  for (auto& [label, pt] : found) out.push_back(std::move(pt));
  return out;
}

SpacePoint sample_point(const SeriesEntry& e, const LieAlgebra& g_lie, std::uint64_t seed) {
  SpacePoint start = base_point(e);
  if (e.star()) {
    const std::vector<SpacePoint> pts = component_points(e);
    start = pts[std::mt19937_64(seed ^ 0x5eedULL)() % pts.size()];
  }
  const Matrix g = cayley_sample(g_lie, seed);
  return make_point(e, image(g, start.q1), image(g, start.q2));
}

}  // namespace symspace
