#include "symspace/matrix.hpp"

#include <ostream>
#include <sstream>

#include "symspace/error.hpp"

namespace symspace {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(Ring ring, std::initializer_list<std::initializer_list<Scalar>> rows)
    : ring_(ring), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (const auto& s : r) data_.push_back(s);
  }
  if (!entries_in_ring(ring_)) throw Error(ErrorKind::RingMismatch, "matrix literal entry outside ring");
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t t = 0; t < n; ++t) m(t, t) = 1;
  return m;
}

Matrix Matrix::diagonal(Ring ring, const std::vector<Scalar>& d) {
  Matrix m(ring, d.size(), d.size());
  for (std::size_t t = 0; t < d.size(); ++t) m(t, t) = d[t];
  return m;
}

Matrix Matrix::column(Ring ring, const std::vector<Scalar>& entries) {
  Matrix m(ring, entries.size(), 1);
  for (std::size_t t = 0; t < entries.size(); ++t) m(t, 0) = entries[t];
  return m;
}

Matrix Matrix::as_ring(Ring r) const {
  if (!entries_in_ring(r)) throw Error(ErrorKind::RingMismatch, "matrix entries do not fit the target ring");
  Matrix m = *this;
  m.ring_ = r;
  return m;
}

bool Matrix::entries_in_ring(Ring r) const {
  for (const auto& s : data_)
    if (!s.in_ring(r)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Matrix Matrix::conj() const {
  Matrix m = *this;
  if (ring_ == Ring::R) return m;
  for (auto& s : m.data_) s = s.conj();
  return m;
}

Matrix Matrix::conj_transpose() const {
  Matrix m(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = ring_ == Ring::R ? (*this)(r, c) : (*this)(r, c).conj();
  return m;
}

Matrix Matrix::col(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  Matrix m(ring_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  ring_ = join(ring_, b.ring_);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  ring_ = join(ring_, o.ring_);
  for (std::size_t t = 0; t < data_.size(); ++t) data_[t] += o.data_[t];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  ring_ = join(ring_, o.ring_);
  for (std::size_t t = 0; t < data_.size(); ++t) data_[t] -= o.data_[t];
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& s : m.data_) s = -s;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  Matrix m(join(a.ring_, b.ring_), a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t t = 0; t < a.cols_; ++t) {
      const Scalar& x = a(r, t);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(t, c);
        if (y.is_zero()) continue;
        m(r, c) += x * y;
      }
    }
  return m;
}

Matrix operator*(const Matrix& a, const Scalar& s) {
  Matrix m = a;
  m.ring_ = join(a.ring_, s.min_ring());
  for (auto& x : m.data_) x = x * s;
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m = a;
  m.ring_ = join(a.ring_, s.min_ring());
  for (auto& x : m.data_) x = s * x;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hcat");
  Matrix m(join(a.ring(), b.ring()), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vcat");
  Matrix m(join(a.ring(), b.ring()), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(join(a.ring(), b.ring()), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

}  // namespace symspace
