#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "symspace/matrix.hpp"
#include "symspace/subspace.hpp"

namespace symspace {

enum class FormKind { Symmetric, Skew, Hermitian, Antihermitian };

const char* to_string(FormKind k);
FormKind form_kind_from_string(const std::string& s);

struct FormType {
  Ring ring;
  FormKind kind;

  bool bilinear() const { return kind == FormKind::Symmetric || kind == FormKind::Skew; }
  /// +1 for symmetric / hermitian, −1 for skew / antihermitian.
  int sign() const { return kind == FormKind::Symmetric || kind == FormKind::Hermitian ? 1 : -1; }
  /// One of the seven admissible combinations (R: sym, skew; C: all four;
  /// H: herm, antiherm).
  bool admissible() const;

  friend bool operator==(const FormType& a, const FormType& b) { return a.ring == b.ring && a.kind == b.kind; }
  friend bool operator!=(const FormType& a, const FormType& b) { return !(a == b); }
};

FormType make_form_type(Ring ring, bool bilinear, int sign);

/// Nondegenerate form with B(v, w) = wᵀ·G·v (bilinear) or w*·G·v
/// (sesquilinear), so that B(vλ, w) = B(v, w)λ and B(v, wλ) = conj(λ)B(v, w).
class Form {
 public:
  /// Throws WrongKind for an inadmissible type or a Gram matrix of the wrong
  /// symmetry, Degenerate for a singular Gram matrix.
  Form(FormType type, Matrix gram);

  const FormType& type() const { return type_; }
  Ring ring() const { return type_.ring; }
  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }

  Scalar evaluate(const Matrix& v, const Matrix& w) const;
  /// Value matrix P with P(j, i) = B(v_i, w_j) for the columns of V and W.
  Matrix pairing(const Matrix& v, const Matrix& w) const;

 private:
  FormType type_;
  Matrix gram_;
};

/// wᵀ or w* depending on the form's linearity in the second slot.
Matrix adjoint_for(const FormType& t, const Matrix& w);

/// Gram matrix of the restriction of F to the column span of `basis`
/// (possibly degenerate).
Matrix restricted_gram(const Form& f, const Matrix& basis);

/// {v : B(u, v) = 0 for all u in U}.
Subspace orthogonal_complement(const Form& f, const Subspace& u);

/// The hermitian normalization i·F of an antihermitian complex form.
Form hermitian_normalization(const Form& f);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;

  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.positive == b.positive && a.negative == b.negative;
  }
  friend bool operator!=(const Inertia& a, const Inertia& b) { return !(a == b); }
  friend bool operator<(const Inertia& a, const Inertia& b) {
    return std::pair(a.positive, a.negative) < std::pair(b.positive, b.negative);
  }
};

/// Inertia indexes by exact symmetric Gaussian congruence. Defined for
/// hermitian forms (symmetric over R) and for antihermitian complex forms via
/// their hermitian normalization; throws WrongKind otherwise.
Inertia inertia(const Form& f);
/// Inertia of a (possibly degenerate) hermitian Gram matrix; the remaining
/// directions are the nullity.
Inertia inertia_of_hermitian(const Matrix& gram);

bool is_isotropic(const Form& f, const Subspace& u);

bool is_split(const Form& f);

struct SplitBasis {
  Matrix e;  // columns e_1..e_n
  Matrix f;  // columns f_1..f_n
};

/// Hyperbolic basis with B(e_k, e_l) = 0, B(f_k, f_l) = 0, B(e_k, f_l) = δ_kl.
/// Throws NotSplit when the type/inertia rules exclude it and NotFound when no
/// rational isotropic vector was located by the structural search.
SplitBasis split_basis(const Form& f);

/// Equivalence under linear change of variables: equal inertia for the
/// hermitian kinds, always true otherwise. Throws WrongKind on type mismatch.
bool congruent(const Form& f, const Form& g);

/// Canonical Gram matrices.
Matrix hyperbolic_gram(Ring ring, std::size_t half, int sign);  // [[0, I], [sign·I, 0]]
Matrix signature_gram(Ring ring, std::size_t p, std::size_t q);  // diag(I_p, −I_q)
Matrix standard_skew_gram(Ring ring, std::size_t half);  // [[0, I], [−I, 0]]
Matrix paired_skew_gram(Ring ring, std::size_t pairs);  // diag([[0,1],[−1,0]], ...)
Matrix quaternion_antihermitian_gram(std::size_t n);  // diag(j, ..., j)

}  // namespace symspace
