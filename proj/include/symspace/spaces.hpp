#pragma once

#include <cstdint>
#include <vector>

#include "symspace/catalog.hpp"

namespace symspace {

/// An ordered pair (Q1, Q2) of complementary subspaces of an entry's V.
struct SpacePoint {
  int entry = 0;
  Params params;
  Subspace q1;
  Subspace q2;

  friend bool operator==(const SpacePoint& a, const SpacePoint& b) {
    return a.entry == b.entry && a.params == b.params && a.q1 == b.q1 && a.q2 == b.q2;
  }
};

SpacePoint base_point(const SeriesEntry& e);
SpacePoint make_point(const SeriesEntry& e, Subspace q1, Subspace q2);

/// The list's defining conditions:
///   List 1  Q1, Q2 B-isotropic of half dimension, V = Q1 ⊕ Q2, J Q1 = Q2
///   List 2  Q1, Q2 B-isotropic of half dimension, V = Q1 ⊕ Q2
///   List 3  V = Q1 ⊕ Q2, J Q1 = Q2
///   List 4  dim Q1 = m, D nondegenerate on Q1, Q2 = Q1^⊥D
///   List 5  dim Q1 = p, dim Q2 = q, V = Q1 ⊕ Q2
/// Throws DimensionMismatch when the subspaces live elsewhere.
bool membership(const SeriesEntry& e, const Subspace& q1, const Subspace& q2);
bool membership(const SeriesEntry& e, const SpacePoint& pt);

/// (g Q1, g Q2); throws NotInGroup unless g ∈ G.
SpacePoint act(const SeriesEntry& e, const Matrix& g, const SpacePoint& pt);

/// Inertia of D restricted to Q1 for ★ entries (List 1: p of the union
/// index; List 4: (r, s)). Throws NotStar otherwise.
Inertia component_index(const SeriesEntry& e, const SpacePoint& pt);

/// The labels of the union as stated: (p, n − p) for p = 0..n, or (r, s)
/// with r + s = m, r ≤ p, s ≤ q.
std::vector<Inertia> component_range(const SeriesEntry& e);

/// One explicit point per realized label, built from coordinate vectors:
/// List 1 chooses e_k or f_k for each k, List 4 takes r positive and s
/// negative basis vectors. Sorted by label.
std::vector<SpacePoint> component_points(const SeriesEntry& e);

/// g·p0 for a Cayley-sampled g ∈ G, where p0 is the base point or, for ★
/// entries, a seed-chosen component point.
SpacePoint sample_point(const SeriesEntry& e, const LieAlgebra& g_lie, std::uint64_t seed);

}  // namespace symspace
