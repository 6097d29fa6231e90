#include "symspace/subspace.hpp"

#include <utility>

#include "symspace/error.hpp"
#include "symspace/linalg.hpp"

namespace symspace {

namespace {

// Column echelon form by right multiplication with elementary matrices.
Matrix column_reduce(Matrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pcol = 0;
  for (std::size_t r = 0; r < rows && pcol < cols; ++r) {
    std::size_t sel = cols;
    for (std::size_t c = pcol; c < cols; ++c)
      if (!a(r, c).is_zero()) {
        sel = c;
        break;
      }
    if (sel == cols) continue;
    if (sel != pcol)
      for (std::size_t t = 0; t < rows; ++t) std::swap(a(t, sel), a(t, pcol));
    const Scalar inv = a(r, pcol).inverse();
    for (std::size_t t = r; t < rows; ++t)
      if (!a(t, pcol).is_zero()) a(t, pcol) = a(t, pcol) * inv;
    for (std::size_t c = 0; c < cols; ++c) {
      if (c == pcol || a(r, c).is_zero()) continue;
      const Scalar f = a(r, c);
      for (std::size_t t = r; t < rows; ++t)
        if (!a(t, pcol).is_zero()) a(t, c) -= a(t, pcol) * f;
    }
    ++pcol;
  }
  return a.cols_range(0, pcol);
}

void require_same_ambient(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspaces live in different ambient spaces");
}

}  // namespace

Subspace::Subspace(const Matrix& spanning) : basis_(column_reduce(spanning)) {}

Subspace Subspace::coordinate(Ring ring, std::size_t ambient, const std::vector<std::size_t>& idx) {
  Matrix m(ring, ambient, idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) m(idx[c], c) = 1;
  return Subspace(m);
}

bool Subspace::contains(const Matrix& vectors) const {
  if (vectors.rows() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "containment test");
  return rank(hcat(basis_, vectors)) == dim();
}

Subspace canonicalize(const Matrix& spanning) { return Subspace(spanning); }

Subspace sum(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w);
  return Subspace(hcat(u.basis(), w.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w);
  // U a = W b  <=>  [U | -W] (a; b) = 0
  const Matrix k = kernel(hcat(u.basis(), -w.basis()));
  return Subspace(u.basis() * k.rows_range(0, u.dim()));
}

bool is_direct_complement(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w);
  return u.dim() + w.dim() == u.ambient_dim() && rank(hcat(u.basis(), w.basis())) == u.ambient_dim();
}

Subspace image(const Matrix& g, const Subspace& u) {
  if (g.cols() != u.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "operator does not act on the ambient space");
  return Subspace(g * u.basis());
}

}  // namespace symspace
