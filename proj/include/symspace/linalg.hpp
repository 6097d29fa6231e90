#pragma once

#include <cstddef>
#include <vector>

#include "symspace/matrix.hpp"

namespace symspace {

/// Reduced row echelon form obtained by left row operations. Pivots are
/// normalized to 1 by left multiplication with the pivot inverse, so the
/// right kernel of `reduced` equals the right kernel of the input.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

RowEchelon row_reduce(Matrix a);
std::size_t rank(const Matrix& a);

/// Basis (as columns) of the right kernel {x : Ax = 0}, a right submodule.
Matrix kernel(const Matrix& a);

/// Rows ℓ with ℓ·a = 0, i.e. the left annihilator of the column span of a.
Matrix left_annihilator(const Matrix& a);

/// A solution x of Ax = b (free variables set to zero).
/// Throws Error(Inconsistent) when no solution exists.
Matrix solve(const Matrix& a, const Matrix& b);

/// Throws Error(Singular) when rank < n.
Matrix inverse(const Matrix& a);
bool is_invertible(const Matrix& a);

/// Faithful ring embedding of n×n quaternionic matrices into 2n×2n complex
/// matrices. The quaternion q = a + j·b (a, b complex; equivalently
/// a + conj(b)·j) becomes [[a, −conj(b)], [b, conj(a)]]: this is the matrix of
/// left multiplication by q on H = C ⊕ jC in the coordinates v = x + j·y.
Matrix complexify(const Matrix& a);

/// Characteristic polynomial det(t·1 − A), highest degree first (monic).
/// Entries must commute (real or complex); quaternionic input is
/// complexified first, giving degree 2n.
std::vector<Scalar> charpoly(const Matrix& a);

}  // namespace symspace
