#include "symspace/linalg.hpp"

#include <utility>

#include "symspace/error.hpp"

namespace symspace {

RowEchelon row_reduce(Matrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t r = prow; r < rows; ++r)
      if (!a(r, c).is_zero()) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    if (sel != prow)
      for (std::size_t t = 0; t < cols; ++t) std::swap(a(sel, t), a(prow, t));
    const Scalar inv = a(prow, c).inverse();
    nz.clear();
    for (std::size_t t = c; t < cols; ++t) {
      if (a(prow, t).is_zero()) continue;
      a(prow, t) = inv * a(prow, t);
      nz.push_back(t);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow || a(r, c).is_zero()) continue;
      const Scalar f = a(r, c);
      for (std::size_t t : nz) a(r, t) -= f * a(prow, t);
    }
    pivots.push_back(c);
    ++prow;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivot_cols.size(); }

Matrix kernel(const Matrix& a) {
  const RowEchelon e = row_reduce(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivot_cols) is_pivot[p] = true;
  Matrix basis(a.ring(), n, n - e.pivot_cols.size());
  std::size_t out = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(f, out) = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) basis(e.pivot_cols[r], out) = -e.reduced(r, f);
    ++out;
  }
  return basis;
}

Matrix left_annihilator(const Matrix& a) { return kernel(a.conj_transpose()).conj_transpose(); }

Matrix solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: row counts differ");
  const RowEchelon e = row_reduce(hcat(a, b));
  const std::size_t n = a.cols();
  Matrix x(join(a.ring(), b.ring()), n, b.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    const std::size_t p = e.pivot_cols[r];
    if (p >= n) throw Error(ErrorKind::Inconsistent, "solve: system has no solution");
    for (std::size_t c = 0; c < b.cols(); ++c) x(p, c) = e.reduced(r, n + c);
  }
  return x;
}

Matrix inverse(const Matrix& a) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  const RowEchelon e = row_reduce(hcat(a, Matrix::identity(a.ring(), n)));
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] >= n))
    throw Error(ErrorKind::Singular, "matrix is not invertible");
  return e.reduced.block(0, n, n, n);
}

bool is_invertible(const Matrix& a) { return a.square() && rank(a) == a.rows(); }

Matrix complexify(const Matrix& a) {
  if (a.ring() != Ring::H) throw Error(ErrorKind::RingMismatch, "complexify expects a quaternionic matrix");
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  Matrix out(Ring::C, 2 * n, 2 * m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      const Scalar& q = a(r, c);
      // q = x0 + x1 i + x2 j + x3 k = (x0 + x1 i) + j (x2 - x3 i)
      const Scalar za(q[0], q[1]);
      const Scalar zb(q[2], -q[3]);
      out(2 * r, 2 * c) = za;
      out(2 * r, 2 * c + 1) = -zb.conj();
      out(2 * r + 1, 2 * c) = zb;
      out(2 * r + 1, 2 * c + 1) = za.conj();
    }
  return out;
}

std::vector<Scalar> charpoly(const Matrix& a) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "charpoly of non-square matrix");
  if (a.ring() == Ring::H) return charpoly(complexify(a));
  // Faddeev–LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = a.rows();
  std::vector<Scalar> coeff(n + 1);
  coeff[0] = 1;
  Matrix mk = Matrix::zero(a.ring(), n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t t = 0; t < n; ++t) mk(t, t) += coeff[k - 1];
    const Matrix am = a * mk;
    Scalar tr;
    for (std::size_t t = 0; t < n; ++t) tr += am(t, t);
    const Rational inv_k(1, static_cast<unsigned long>(k));
    coeff[k] = -(tr * Scalar(inv_k));
  }
  return coeff;
}

}  // namespace symspace
