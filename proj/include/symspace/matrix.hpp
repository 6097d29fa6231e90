#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "symspace/scalar.hpp"

namespace symspace {

/// Dense matrix over one of the division rings.
///
/// Operators act on column vectors from the left (v ↦ Av); scalars act on
/// vectors from the right (v ↦ vλ). All arithmetic is exact. The ring tag of
/// a result is the join of the operand tags.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  Matrix(Ring ring, std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(Ring ring, std::size_t n);
  static Matrix zero(Ring ring, std::size_t rows, std::size_t cols) { return {ring, rows, cols}; }
  static Matrix diagonal(Ring ring, const std::vector<Scalar>& d);
  static Matrix column(Ring ring, const std::vector<Scalar>& entries);

  Ring ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  /// Retag to a larger ring (or a smaller one if every entry fits).
  Matrix as_ring(Ring r) const;
  bool entries_in_ring(Ring r) const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix conj() const;
  Matrix conj_transpose() const;

  Matrix col(std::size_t c) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix cols_range(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }
  Matrix rows_range(std::size_t r0, std::size_t nr) const { return block(r0, 0, nr, cols_); }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  /// Right scalar multiplication A·λ.
  friend Matrix operator*(const Matrix& a, const Scalar& s);
  /// Left scalar multiplication λ·A.
  friend Matrix operator*(const Scalar& s, const Matrix& a);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Ring ring_ = Ring::R;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

}  // namespace symspace
