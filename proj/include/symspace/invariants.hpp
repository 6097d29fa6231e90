#pragma once

#include <cstddef>
#include <vector>

#include "symspace/charts.hpp"

namespace symspace {

/// Characteristic polynomial of NM, highest degree first. Over H the
/// polynomial is taken of complexify(NM), so degree = 2·dim Q1.
struct DoubleRatio {
  Ring ring;
  std::size_t degree;
  std::vector<Scalar> charpoly;

  friend bool operator==(const DoubleRatio& a, const DoubleRatio& b) {
    return a.ring == b.ring && a.degree == b.degree && a.charpoly == b.charpoly;
  }
};

/// M = angular_operator(R1; Q1, Q2), N = angular_operator(R2; Q2, Q1).
/// Throws NotTransverse.
DoubleRatio double_ratio(const SeriesEntry& e, const SpacePoint& pt1, const SpacePoint& pt2);

/// The operator (1 − Y₂X₁)⁻¹(X₂ − Y₂)(1 − Y₁X₂)⁻¹(X₁ − Y₁) on X from chart
/// coordinates (X₁, X₂) of pt1 and (Y₁, Y₂) of pt2. Throws Singular when a
/// factor is not invertible.
Matrix coordinate_double_ratio(const AngularCoords& pt1, const AngularCoords& pt2);

DoubleRatio charpoly_of(const Matrix& op);

}  // namespace symspace
