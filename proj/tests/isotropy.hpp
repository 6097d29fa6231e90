#pragma once

#include <random>

#include "symspace/catalog.hpp"
#include "symspace/linalg.hpp"

namespace symspace::testing {

/// A maximal B-isotropic subspace g·Q1 for a Cayley sample g of U(B).
inline Subspace random_lagrangian(const SeriesEntry& e, const LieAlgebra& ub, std::uint64_t seed) {
  return image(cayley_sample(ub, seed), e.q1);
}

/// J maps a random isotropic subspace to an isotropic subspace.
inline bool isotropy_trial(const SeriesEntry& e, const LieAlgebra& ub, std::uint64_t seed) {
  const Subspace p = random_lagrangian(e, ub, seed);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  const std::size_t k = 1 + seed % p.dim();
  Matrix mix(e.ring, p.dim(), k);
  for (std::size_t r = 0; r < mix.rows(); ++r)
    for (std::size_t c = 0; c < k; ++c) mix(r, c) = Scalar(coeff(rng));
  const Subspace u(p.basis() * mix);
  return is_isotropic(*e.b, u) && is_isotropic(*e.b, e.j->apply(u));
}

/// J·P is the D-orthogonal complement of a maximal isotropic P.
inline bool orthocomplement_trial(const SeriesEntry& e, const LieAlgebra& ub, std::uint64_t seed) {
  const Subspace p = random_lagrangian(e, ub, seed);
  return is_isotropic(*e.b, p) && e.j->apply(p) == orthogonal_complement(*e.d, p);
}

}  // namespace symspace::testing
