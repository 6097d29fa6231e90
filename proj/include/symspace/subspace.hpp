#pragma once

#include <cstddef>

#include "symspace/matrix.hpp"

namespace symspace {

/// A right submodule of K^n, stored by its unique canonical basis: the
/// reduced column echelon form of any spanning matrix (pivots normalized to 1
/// by right scalar multiplication, pivot columns ordered by pivot row).
class Subspace {
 public:
  Subspace() = default;
  /// Column span of `spanning`.
  explicit Subspace(const Matrix& spanning);

  static Subspace zero(Ring ring, std::size_t ambient) { return Subspace(Matrix(ring, ambient, 0)); }
  static Subspace full(Ring ring, std::size_t ambient) { return Subspace(Matrix::identity(ring, ambient)); }
  /// span(e_i : i in idx), 0-based.
  static Subspace coordinate(Ring ring, std::size_t ambient, const std::vector<std::size_t>& idx);

  Ring ring() const { return basis_.ring(); }
  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Matrix& vectors) const;
  bool contains(const Subspace& other) const { return contains(other.basis_); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Matrix basis_;
};

/// Canonical column-reduced representative of the column span.
Subspace canonicalize(const Matrix& spanning);

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);
/// dim U + dim W = n and U ∩ W = 0.
bool is_direct_complement(const Subspace& u, const Subspace& w);

/// Image of U under the linear operator g.
Subspace image(const Matrix& g, const Subspace& u);

}  // namespace symspace
