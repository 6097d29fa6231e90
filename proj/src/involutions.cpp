#include "symspace/involutions.hpp"

#include <utility>
#include <vector>

#include "symspace/error.hpp"
#include "symspace/linalg.hpp"

namespace symspace {

const char* to_string(Linearity l) { return l == Linearity::Linear ? "lin" : "antilin"; }

Linearity linearity_from_string(const std::string& s) {
  if (s == "lin") return Linearity::Linear;
  if (s == "antilin") return Linearity::Antilinear;
  throw Error(ErrorKind::Parse, "unknown linearity '" + s + "'");
}

Semiinvolution::Semiinvolution(Ring ring, Linearity linearity, Matrix c, int epsilon)
    : ring_(ring), linearity_(linearity), c_(std::move(c)), epsilon_(epsilon) {
  if (!c_.square()) throw Error(ErrorKind::DimensionMismatch, "semiinvolution matrix must be square");
  if (!c_.entries_in_ring(ring_)) throw Error(ErrorKind::RingMismatch, "semiinvolution matrix outside its ring");
  c_ = c_.as_ring(ring_);
  if (antilinear() && ring_ != Ring::C) throw Error(ErrorKind::WrongKind, "antilinear operators exist over C only");
  if (epsilon_ != 1 && epsilon_ != -1) throw Error(ErrorKind::BadParams, "J² must be ±1");
  const Matrix sq = antilinear() ? c_ * c_.conj() : c_ * c_;
  if (sq != Matrix::identity(ring_, dim()) * Scalar(epsilon_))
    throw Error(ErrorKind::Inconsistent, "matrix does not square to the stated epsilon");
}

Matrix Semiinvolution::apply(const Matrix& v) const {
  if (v.rows() != dim()) throw Error(ErrorKind::DimensionMismatch, "semiinvolution applied to wrong size");
  return antilinear() ? c_ * v.conj() : c_ * v;
}

Matrix Semiinvolution::apply_inverse(const Matrix& v) const { return apply(v) * Scalar(epsilon_); }

bool Semiinvolution::commutes_with(const Matrix& g) const {
  if (g.rows() != dim() || !g.square()) throw Error(ErrorKind::DimensionMismatch, "commutation test");
  return g * c_ == c_ * (antilinear() ? g.conj() : g);
}

namespace {

void require_same_space(const Form& b, const Semiinvolution& j) {
  if (b.dim() != j.dim()) throw Error(ErrorKind::DimensionMismatch, "form and semiinvolution act on different spaces");
  if (b.ring() != j.ring()) throw Error(ErrorKind::RingMismatch, "form and semiinvolution over different rings");
}

// Gram matrix of (v, w) ↦ F(v, Jw), and whether that pairing is bilinear.
std::pair<Matrix, bool> twisted_gram(const Form& f, const Semiinvolution& j) {
  const bool bilinear = f.ring() == Ring::R || (f.type().bilinear() != j.antilinear());
  return {adjoint_for(f.type(), j.matrix()) * f.gram(), bilinear};
}

Form form_from_gram(Ring ring, const Matrix& gram, bool bilinear) {
  const FormType probe = make_form_type(ring, bilinear, 1);
  const Matrix adj = adjoint_for(probe, gram);
  if (adj == gram) return Form(probe, gram);
  if (adj == -gram) return Form(make_form_type(ring, bilinear, -1), gram);
  throw Error(ErrorKind::WrongKind, "pairing is neither symmetric nor skew");
}

}  // namespace

int detect_mu(const Form& b, const Semiinvolution& j) {
  require_same_space(b, j);
  const Matrix& c = j.matrix();
  const Matrix lhs = adjoint_for(b.type(), c) * b.gram() * c;
  const Matrix rhs = j.antilinear() ? b.gram().conj() : b.gram();
  for (std::size_t r = 0; r < rhs.rows(); ++r)
    for (std::size_t col = 0; col < rhs.cols(); ++col) {
      if (rhs(r, col).is_zero()) continue;
      const Scalar mu = lhs(r, col) * rhs(r, col).inverse();
      if (!mu.is_central(b.ring()) || lhs != rhs * mu) throw Error(ErrorKind::NotConsistent, "no constant μ relates B(Jv, Jw) to B");
      if (mu == Scalar(1)) return 1;
      if (mu == Scalar(-1)) return -1;
      throw Error(ErrorKind::NotPlusMinusOne, "μ = " + mu.to_string());
    }
  throw Error(ErrorKind::Degenerate, "zero Gram matrix");
}

Form managing_form(const Form& b, const Semiinvolution& j) {
  detect_mu(b, j);
  const auto [gram, bilinear] = twisted_gram(b, j);
  return form_from_gram(b.ring(), gram, bilinear);
}

Form underlying_form(const Form& d, const Semiinvolution& j) {
  require_same_space(d, j);
  const auto [gram, bilinear] = twisted_gram(d, j);
  return form_from_gram(d.ring(), gram * Scalar(j.epsilon()), bilinear);
}

Species species(const Semiinvolution& j) {
  if (!j.antilinear()) {
    if (j.epsilon() == 1 || j.ring() == Ring::C) return Species::A;
    return j.ring() == Ring::R ? Species::B : Species::E;
  }
  return j.epsilon() == -1 ? Species::C : Species::D;
}

char to_char(Species s) { return static_cast<char>('a' + static_cast<int>(s)); }

namespace {

// u_1..u_k with span{u_a, Ju_a} = V over the base ring.
Matrix j_frame_seeds(const Semiinvolution& j) {
  const std::size_t n = j.dim();
  Matrix span(j.ring(), n, 0);
  Matrix seeds(j.ring(), n, 0);
  for (std::size_t t = 0; t < n && span.cols() < n; ++t) {
    Matrix e(j.ring(), n, 1);
    e(t, 0) = 1;
    if (rank(hcat(span, e)) == span.cols()) continue;
    seeds = hcat(seeds, e);
    span = hcat(span, hcat(e, j.apply(e)));
  }
  return seeds;
}

// The larger-ring scalar x + u·y for the new unit u (i over R, j over C).
Scalar lift(Ring target, const Scalar& x, const Scalar& y) {
  if (target == Ring::C) return Scalar(x.re(), y.re());
  return Scalar(x[0], x[1], y[0], -y[1]);
}

// Candidate (complex part, j-part) pairs. Over H the complex part of a form
// must be sesquilinear, so it is B or D, whichever is, turned by i when the
// plain choice is neither hermitian nor antihermitian.
std::vector<std::pair<Form, Form>> induced_parts(const Form& b, const Semiinvolution& j, Ring target) {
  const Form d = managing_form(b, j);
  if (target == Ring::C) return {{b, d}};
  const Form& p = b.type().bilinear() ? d : b;
  const Form turned(make_form_type(Ring::C, false, -p.type().sign()), Scalar::i() * p.gram());
  return {{p, managing_form(p, j)}, {turned, managing_form(turned, j)}};
}

InducedStructure induce(const Form& b, const Semiinvolution& j, Ring target) {
  const Matrix u = j_frame_seeds(j);
  const std::size_t k = u.cols();
  const Scalar unit = target == Ring::C ? Scalar::i() : Scalar::j();

  for (const auto& [p, q] : induced_parts(b, j, target))
    for (int s : {1, -1})
      for (int c : {1, -1}) {
        if (target == Ring::C && c == -1) continue;
        auto value = [&](const Matrix& v, const Matrix& w) { return lift(target, p.evaluate(v, w), q.evaluate(v, w) * Scalar(c)); };
        const Matrix ju = j.apply(u) * Scalar(s);
        Matrix gram(target, k, k);
        bool linear_first = true;
        for (std::size_t a = 0; a < k && linear_first; ++a)
          for (std::size_t col = 0; col < k && linear_first; ++col) {
            gram(a, col) = value(u.col(col), u.col(a));
            linear_first = value(ju.col(col), u.col(a)) == gram(a, col) * unit;
          }
        if (!linear_first) continue;
        bool bilinear = true, sesquilinear = true;
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t col = 0; col < k; ++col) {
            const Scalar twisted = value(u.col(col), ju.col(a));
            bilinear = bilinear && twisted == gram(a, col) * unit;
            sesquilinear = sesquilinear && twisted == unit.conj() * gram(a, col);
          }
        if (target == Ring::H) {
          if (!sesquilinear) continue;
          bilinear = false;
        }
        try {
          return {target, s, hcat(u, ju), form_from_gram(target, gram, bilinear)};
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::WrongKind) throw;
        }
      }
  throw Error(ErrorKind::Inconsistent, "form is not sesquilinear for the induced structure");
}

}  // namespace

InducedStructure complexified_form(const Form& b, const Semiinvolution& j) {
  if (species(j) != Species::B) throw Error(ErrorKind::WrongSpecies, "complexification needs species b)");
  return induce(b, j, Ring::C);
}

InducedStructure quaternionified_form(const Form& b, const Semiinvolution& j) {
  if (species(j) != Species::C) throw Error(ErrorKind::WrongSpecies, "quaternionification needs species c)");
  return induce(b, j, Ring::H);
}

Matrix induced_matrix(const InducedStructure& st, const Matrix& g) {
  const std::size_t k = st.frame.cols() / 2;
  const Matrix coords = solve(st.frame, g * st.frame.cols_range(0, k));
  Matrix out(st.ring, k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < k; ++c) out(a, c) = lift(st.ring, coords(a, c), coords(k + a, c));
  return out;
}

}  // namespace symspace
