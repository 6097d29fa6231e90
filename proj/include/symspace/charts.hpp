#pragma once

#include <cstddef>

#include "symspace/spaces.hpp"

namespace symspace {

/// Coordinates centered at a member point (X, Y); V = X ⊕ Y.
struct Chart {
  int entry = 0;
  Subspace x;
  Subspace y;
};

/// Throws ShapeViolation unless (X, Y) is a member of the entry's space.
Chart make_chart(const SeriesEntry& e, const SpacePoint& center);

/// M : X → Y and N : Y → X in the bases of X and Y: Q1 = graph(M), Q2 = graph(N).
struct AngularCoords {
  Matrix m;
  Matrix n;

  friend bool operator==(const AngularCoords& a, const AngularCoords& b) { return a.m == b.m && a.n == b.n; }
};

/// The L with R = {x + Lx : x ∈ X}, as a (dim Y × dim X) matrix in the
/// canonical bases. Throws NotTransverse when R ∩ Y ≠ 0 or dim R ≠ dim X.
Matrix angular_operator(const Subspace& r, const Subspace& x, const Subspace& y);
/// span(Xb + Yb·L).
Subspace graph(const Subspace& x, const Subspace& y, const Matrix& l);

AngularCoords to_coords(const SeriesEntry& e, const Chart& c, const SpacePoint& pt);
/// Throws ShapeViolation when the coordinates fail the conditions below.
SpacePoint from_coords(const SeriesEntry& e, const Chart& c, const AngularCoords& coords);

/// 1 − MN invertible (over H via complexify).
bool transversality_holds(const AngularCoords& coords);
/// B(Mx₁, x₂) + B(x₁, Mx₂) = 0 for L : X → Y.
bool isotropy_condition(const Form& b, const Subspace& x, const Subspace& y, const Matrix& l);
/// D(x, Ny) + D(Mx, y) = 0.
bool orthogonality_condition(const Form& d, const Chart& c, const AngularCoords& coords);
/// N = J M J⁻¹.
bool exchange_condition(const Semiinvolution& j, const Chart& c, const AngularCoords& coords);

struct ShapeReport {
  bool transversal = true;
  bool isotropy = true;       // lists 1 and 2
  bool orthogonality = true;  // lists 1 and 4
  bool exchange = true;       // lists 1 and 3

  bool ok() const { return transversal && isotropy && orthogonality && exchange; }
};

/// The subset of conditions that applies to the entry's list.
ShapeReport shape_conditions(const SeriesEntry& e, const Chart& c, const AngularCoords& coords);

/// g in the chart's block form P⁻¹gP = [[A, B], [C, D]], P = [Xb | Yb].
struct Blocks {
  Matrix a, b, c, d;
};
Blocks chart_blocks(const Chart& c, const Matrix& g);

/// R ↦ (C + DR)(A + BR)⁻¹; throws ChartBoundary when A + BR is singular.
Matrix fractional_linear(const Blocks& g, const Matrix& r);
/// M transforms by fractional_linear, N by N ↦ (B + AN)(D + CN)⁻¹.
AngularCoords act_on_coords(const Chart& c, const Matrix& g, const AngularCoords& coords);

/// Real dimension of the space of admissible angular operators at the base
/// chart: isotropic M for List 1, isotropic M and N for List 2, any M for
/// Lists 3 and 4, any M and N for List 5.
std::size_t grassmannian_dim(const SeriesEntry& e);

}  // namespace symspace
