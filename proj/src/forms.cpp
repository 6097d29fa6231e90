#include "symspace/forms.hpp"

#include <array>

#include "symspace/error.hpp"
#include "symspace/linalg.hpp"

namespace symspace {

const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::Symmetric: return "sym";
    case FormKind::Skew: return "skew";
    case FormKind::Hermitian: return "herm";
    case FormKind::Antihermitian: return "antiherm";
  }
  return "?";
}

FormKind form_kind_from_string(const std::string& s) {
  if (s == "sym") return FormKind::Symmetric;
  if (s == "skew") return FormKind::Skew;
  if (s == "herm") return FormKind::Hermitian;
  if (s == "antiherm") return FormKind::Antihermitian;
  throw Error(ErrorKind::Parse, "unknown form kind '" + s + "'");
}

bool FormType::admissible() const {
  switch (ring) {
    case Ring::R: return bilinear();
    case Ring::C: return true;
    case Ring::H: return !bilinear();
  }
  return false;
}

FormType make_form_type(Ring ring, bool bilinear, int sign) {
  // Over R the sesquilinear kinds coincide with the bilinear ones.
  if (ring == Ring::R) bilinear = true;
  if (bilinear) return {ring, sign > 0 ? FormKind::Symmetric : FormKind::Skew};
  return {ring, sign > 0 ? FormKind::Hermitian : FormKind::Antihermitian};
}

Matrix adjoint_for(const FormType& t, const Matrix& w) { return t.bilinear() ? w.transpose() : w.conj_transpose(); }

Form::Form(FormType type, Matrix gram) : type_(type), gram_(std::move(gram)) {
  if (!type_.admissible()) throw Error(ErrorKind::WrongKind, std::string(to_string(type_.kind)) + " forms do not exist over " + to_string(type_.ring));
  if (!gram_.square()) throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
  gram_ = gram_.as_ring(type_.ring);
  const Matrix adj = adjoint_for(type_, gram_);
  const Matrix expect = type_.sign() > 0 ? gram_ : -gram_;
  if (adj != expect) throw Error(ErrorKind::WrongKind, "Gram matrix symmetry does not match the form kind");
  if (rank(gram_) != gram_.rows()) throw Error(ErrorKind::Degenerate, "Gram matrix is singular");
}

Scalar Form::evaluate(const Matrix& v, const Matrix& w) const {
  if (v.rows() != dim() || w.rows() != dim() || v.cols() != 1 || w.cols() != 1)
    throw Error(ErrorKind::DimensionMismatch, "form evaluation");
  return pairing(v, w)(0, 0);
}

Matrix Form::pairing(const Matrix& v, const Matrix& w) const {
  if (v.rows() != dim() || w.rows() != dim()) throw Error(ErrorKind::DimensionMismatch, "form pairing");
  return adjoint_for(type_, w) * (gram_ * v);
}

Matrix restricted_gram(const Form& f, const Matrix& basis) { return f.pairing(basis, basis); }

Form hermitian_normalization(const Form& f) {
  if (f.ring() != Ring::C || f.type().kind != FormKind::Antihermitian)
    throw Error(ErrorKind::WrongKind, "hermitian normalization applies to antihermitian complex forms");
  return Form({Ring::C, FormKind::Hermitian}, Scalar::i() * f.gram());
}

Subspace orthogonal_complement(const Form& f, const Subspace& u) {
  if (u.ambient_dim() != f.dim()) throw Error(ErrorKind::DimensionMismatch, "subspace and form");
  // B(u, v) = adj(v)·G·u = 0 for all u  <=>  adj(G·U)·v = 0 (conjugated when sesquilinear)
  const Matrix gu = f.gram() * u.basis();
  const Matrix rows = f.type().bilinear() ? gu.transpose() : gu.conj_transpose();
  return Subspace(kernel(rows));
}

namespace {

Scalar adj_scalar(bool bilinear, const Scalar& s) { return bilinear ? s : s.conj(); }

struct Diagonalization {
  Matrix transform;  // columns t_k with B(t_k, t_l) = 0 for k != l
  std::vector<Scalar> diag;
  std::size_t nullity = 0;
};

// Symmetric congruence A ↦ T†AT on a Gram matrix of symmetric (bilinear),
// hermitian or antihermitian type. Entry A(j, i) = B(e_i, e_j).
Diagonalization congruence_diagonalize(Matrix a, bool bilinear) {
  const std::size_t n = a.rows();
  Matrix t = Matrix::identity(a.ring(), n);
  std::vector<bool> done(n, false);
  Diagonalization out;

  // column i += column k·s, row i += adj(s)·row k  (T = I + e_k s e_iᵀ)
  auto add_multiple = [&](std::size_t i, std::size_t k, const Scalar& s) {
    for (std::size_t r = 0; r < n; ++r)
      if (!a(r, k).is_zero()) a(r, i) += a(r, k) * s;
    const Scalar sa = adj_scalar(bilinear, s);
    for (std::size_t c = 0; c < n; ++c)
      if (!a(k, c).is_zero()) a(i, c) += sa * a(k, c);
    for (std::size_t r = 0; r < n; ++r)
      if (!t(r, k).is_zero()) t(r, i) += t(r, k) * s;
  };

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t k = 0; k < n; ++k)
      if (!done[k] && !a(k, k).is_zero()) {
        piv = k;
        break;
      }
    if (piv == n) {
      // All remaining diagonal entries vanish: manufacture one from an
      // off-diagonal entry with e_i + e_j·λ.
      bool fixed = false;
      for (std::size_t i = 0; i < n && !fixed; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n && !fixed; ++j) {
          if (done[j] || i == j || a(j, i).is_zero()) continue;
          const std::array<Scalar, 4> units{Scalar(1), Scalar::i(), Scalar::j(), Scalar::k()};
          for (const auto& lam : units) {
            if (!lam.in_ring(a.ring())) continue;
            const Scalar val = a(i, i) + a(j, i) * lam + adj_scalar(bilinear, lam) * a(i, j) + adj_scalar(bilinear, lam) * a(j, j) * lam;
            if (val.is_zero()) continue;
            add_multiple(i, j, lam);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
      for (std::size_t k = 0; k < n && piv == n; ++k)
        if (!done[k] && !a(k, k).is_zero()) piv = k;
    }
    const Scalar d_inv = a(piv, piv).inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == piv || a(piv, i).is_zero()) continue;
      add_multiple(i, piv, -(d_inv * a(piv, i)));
    }
    done[piv] = true;
    out.diag.push_back(a(piv, piv));
    out.transform = out.transform.empty() ? t.col(piv) : hcat(out.transform, t.col(piv));
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!done[k]) ++out.nullity;
  if (out.transform.empty()) out.transform = Matrix(a.ring(), n, 0);
  return out;
}

bool is_rational_square(const Rational& r, Rational& root) {
  if (sgn(r) < 0) return false;
  mpz_class num = r.get_num();
  mpz_class den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class sn;
  mpz_class sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  root = Rational(sn, sd);
  root.canonicalize();
  return true;
}

// y with adj(y)·d_b·y = target, or nothing.
bool solve_scaled_norm(const Scalar& d_b, const Scalar& target, Ring ring, bool bilinear, Scalar& y) {
  auto check = [&](const Scalar& c) { return adj_scalar(bilinear, c) * d_b * c == target; };
  if (d_b.is_real() && target.is_real()) {
    const Rational r = target.re() / d_b.re();
    Rational root;
    if (is_rational_square(r, root) && check(Scalar(root))) {
      y = root;
      return true;
    }
    if (ring != Ring::R && is_rational_square(-r, root) && check(Scalar(0, root))) {
      y = Scalar(0, root);
      return true;
    }
  }
  const int lim = 2;
  for (int a = -lim; a <= lim; ++a)
    for (int b = -lim; b <= lim; ++b)
      for (int c = -lim; c <= lim; ++c)
        for (int d = -lim; d <= lim; ++d) {
          const Scalar cand(a, b, c, d);
          if (cand.is_zero() || !cand.in_ring(ring)) continue;
          if (check(cand)) {
            y = cand;
            return true;
          }
        }
  return false;
}

Matrix find_isotropic(const Form& f, const Matrix& w) {
  const Matrix a = restricted_gram(f, w);
  for (std::size_t i = 0; i < w.cols(); ++i)
    if (a(i, i).is_zero()) return w.col(i);
  const Diagonalization dg = congruence_diagonalize(a, f.type().bilinear());
  const Matrix t = w * dg.transform;
  for (std::size_t x = 0; x < dg.diag.size(); ++x)
    for (std::size_t z = 0; z < dg.diag.size(); ++z) {
      if (x == z) continue;
      Scalar y;
      if (solve_scaled_norm(dg.diag[z], -dg.diag[x], f.ring(), f.type().bilinear(), y))
        return t.col(x) + t.col(z) * y;
    }
  throw Error(ErrorKind::NotFound, "no rational isotropic vector located");
}

}  // namespace

Inertia inertia_of_hermitian(const Matrix& gram) {
  if (gram.conj_transpose() != gram) throw Error(ErrorKind::WrongKind, "inertia needs a hermitian Gram matrix");
  const Diagonalization dg = congruence_diagonalize(gram, false);
  Inertia in;
  for (const auto& d : dg.diag) (sgn(d.re()) > 0 ? in.positive : in.negative)++;
  return in;
}

Inertia inertia(const Form& f) {
  const FormType& t = f.type();
  if (t.ring == Ring::C && t.kind == FormKind::Antihermitian) return inertia(hermitian_normalization(f));
  const bool hermitian_like = t.kind == FormKind::Hermitian || (t.ring == Ring::R && t.kind == FormKind::Symmetric);
  if (!hermitian_like) throw Error(ErrorKind::WrongKind, "inertia is defined for hermitian forms only");
  return inertia_of_hermitian(f.gram());
}

bool is_isotropic(const Form& f, const Subspace& u) {
  if (u.ambient_dim() != f.dim()) throw Error(ErrorKind::DimensionMismatch, "isotropy test");
  return restricted_gram(f, u.basis()).is_zero();
}

bool is_split(const Form& f) {
  const FormType& t = f.type();
  const bool hermitian_like = t.kind == FormKind::Hermitian || (t.ring == Ring::R && t.kind == FormKind::Symmetric) ||
                              (t.ring == Ring::C && t.kind == FormKind::Antihermitian);
  if (hermitian_like) {
    const Inertia in = inertia(f);
    return in.positive == in.negative;
  }
  return f.dim() % 2 == 0;
}

SplitBasis split_basis(const Form& f) {
  if (!is_split(f)) throw Error(ErrorKind::NotSplit, "form has no half-dimensional isotropic subspace");
  const Ring ring = f.ring();
  const std::size_t half = f.dim() / 2;
  SplitBasis out{Matrix(ring, f.dim(), 0), Matrix(ring, f.dim(), 0)};
  Matrix w = Matrix::identity(ring, f.dim());
  while (w.cols() > 0) {
    const Matrix e = find_isotropic(f, w);
    Matrix fv;
    for (std::size_t c = 0; c < w.cols(); ++c) {
      const Scalar b = f.evaluate(e, w.col(c));
      if (b.is_zero()) continue;
      // B(e, wλ) = adj(λ)·B(e, w) = 1
      const Scalar lam = f.type().bilinear() ? b.inverse() : b.inverse().conj();
      fv = w.col(c) * lam;
      break;
    }
    if (fv.empty()) throw Error(ErrorKind::Degenerate, "form degenerate on the remaining block");
    const Scalar c = -(f.evaluate(fv, fv) * Scalar(Rational(1, 2)));
    fv = fv + e * c;
    out.e = hcat(out.e, e);
    out.f = hcat(out.f, fv);
    const Matrix cond = vcat(adjoint_for(f.type(), e) * f.gram() * w, adjoint_for(f.type(), fv) * f.gram() * w);
    w = w * kernel(cond);
  }
  if (out.e.cols() != half) throw Error(ErrorKind::NotFound, "split basis construction stalled");
  return out;
}

bool congruent(const Form& f, const Form& g) {
  if (f.type() != g.type()) throw Error(ErrorKind::WrongKind, "congruence needs forms of the same type");
  if (f.dim() != g.dim()) return false;
  const FormType& t = f.type();
  const bool classified_by_inertia = t.kind == FormKind::Hermitian || (t.ring == Ring::R && t.kind == FormKind::Symmetric) ||
                                     (t.ring == Ring::C && t.kind == FormKind::Antihermitian);
  if (!classified_by_inertia) return true;
  return inertia(f) == inertia(g);
}

Matrix hyperbolic_gram(Ring ring, std::size_t half, int sign) {
  Matrix g(ring, 2 * half, 2 * half);
  for (std::size_t t = 0; t < half; ++t) {
    g(t, half + t) = 1;
    g(half + t, t) = sign;
  }
  return g;
}

Matrix signature_gram(Ring ring, std::size_t p, std::size_t q) {
  Matrix g(ring, p + q, p + q);
  for (std::size_t t = 0; t < p + q; ++t) g(t, t) = t < p ? 1 : -1;
  return g;
}

Matrix standard_skew_gram(Ring ring, std::size_t half) { return hyperbolic_gram(ring, half, -1); }

Matrix paired_skew_gram(Ring ring, std::size_t pairs) {
  Matrix g(ring, 2 * pairs, 2 * pairs);
  for (std::size_t t = 0; t < pairs; ++t) {
    g(2 * t, 2 * t + 1) = 1;
    g(2 * t + 1, 2 * t) = -1;
  }
  return g;
}

Matrix quaternion_antihermitian_gram(std::size_t n) {
  Matrix g(Ring::H, n, n);
  for (std::size_t t = 0; t < n; ++t) g(t, t) = Scalar::j();
  return g;
}

}  // namespace symspace
