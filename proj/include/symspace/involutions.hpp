#pragma once

#include <cstddef>

#include "symspace/forms.hpp"
#include "symspace/matrix.hpp"
#include "symspace/subspace.hpp"

namespace symspace {

enum class Linearity { Linear, Antilinear };

const char* to_string(Linearity l);  // "lin" | "antilin"
Linearity linearity_from_string(const std::string& s);

/// A (anti)linear operator J with J² = ε·1, stored as Jv = Cv or Jv = C·conj(v).
/// Antilinear operators exist over C only.
class Semiinvolution {
 public:
  Semiinvolution(Ring ring, Linearity linearity, Matrix c, int epsilon);

  Ring ring() const { return ring_; }
  Linearity linearity() const { return linearity_; }
  bool antilinear() const { return linearity_ == Linearity::Antilinear; }
  const Matrix& matrix() const { return c_; }
  int epsilon() const { return epsilon_; }
  std::size_t dim() const { return c_.rows(); }

  /// J applied to each column.
  Matrix apply(const Matrix& v) const;
  Subspace apply(const Subspace& u) const { return Subspace(apply(u.basis())); }
  /// J⁻¹ = ε·J.
  Matrix apply_inverse(const Matrix& v) const;
  /// Whether g·J = J·g for a linear operator g.
  bool commutes_with(const Matrix& g) const;

 private:
  Ring ring_;
  Linearity linearity_;
  Matrix c_;
  int epsilon_;
};

/// μ with B(Jv, Jw) = μ·B(v, w) (linear J) or μ·conj(B(v, w)) (antilinear J).
/// Throws NotConsistent when no central μ exists and NotPlusMinusOne when μ ≠ ±1.
int detect_mu(const Form& b, const Semiinvolution& j);

/// D(v, w) = B(v, Jw).
Form managing_form(const Form& b, const Semiinvolution& j);
/// The form B with D(v, w) = B(v, Jw), i.e. B(v, w) = ε·D(v, Jw).
Form underlying_form(const Form& d, const Semiinvolution& j);

/// The structure carried by J:
///   a) linear, J² = 1            → V = V₊ ⊕ V₋, GL^J = GL(V₊) × GL(V₋)
///   b) R, J² = −1                → V is complex, GL^J = GL(n/2, C)
///   c) C, antilinear, J² = −1    → V is quaternionic, GL^J = GL(n/2, H)
///   d) C, antilinear, J² = 1     → V is a complexified real space, GL^J = GL(n, R)
///   e) H, J² = −1                → V is a quaternionized complex space, GL^J = GL(n, C)
enum class Species { A, B, C, D, E };
Species species(const Semiinvolution& j);
char to_char(Species s);

/// V regarded over the larger ring of species b) (C) or c) (H). The columns
/// of `frame` are u_1..u_k, s·Ju_1..s·Ju_k; they form a basis of V over the
/// base ring and u_1..u_k form a basis over the larger ring, where the new
/// imaginary unit acts as s·J.
struct InducedStructure {
  Ring ring;
  int s;
  Matrix frame;
  Form form;
};

/// Z = B + i·D on the complex space of species b).
InducedStructure complexified_form(const Form& b, const Semiinvolution& j);
/// Y = P + j·P(·, J·) on the quaternionic space of species c), where the
/// complex part P is B when B is sesquilinear and D otherwise, turned by i
/// when needed to make Y hermitian or antihermitian.
InducedStructure quaternionified_form(const Form& b, const Semiinvolution& j);
/// Matrix over the larger ring of an operator commuting with J.
Matrix induced_matrix(const InducedStructure& st, const Matrix& g);

}  // namespace symspace
