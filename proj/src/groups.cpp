#include "symspace/groups.hpp"

#include <random>

#include "symspace/error.hpp"
#include "symspace/linalg.hpp"
#include "symspace/realify.hpp"

namespace symspace {

std::size_t GroupLabel::real_dim() const {
  const std::size_t n = a + b;
  switch (family) {
    case Family::GL: return a * a * static_cast<std::size_t>(real_rank(ring));
    case Family::O: return n * (n - (n > 0 ? 1 : 0)) / 2;
    case Family::OC: return a * (a - (a > 0 ? 1 : 0));
    case Family::SpR: return a * (a + 1) / 2;
    case Family::SpC: return a * (a + 1);
    case Family::U: return n * n;
    case Family::SpH: return n * (2 * n + 1);
    case Family::SOStar: return a / 2 * (a - (a > 0 ? 1 : 0));
  }
  return 0;
}

std::string GroupLabel::to_string() const {
  const std::string sa = std::to_string(a), sb = std::to_string(b);
  switch (family) {
    case Family::GL: return "GL(" + sa + "," + symspace::to_string(ring) + ")";
    case Family::O: return "O(" + sa + "," + sb + ")";
    case Family::OC: return "O(" + sa + ",C)";
    case Family::SpR: return "Sp(" + sa + ",R)";
    case Family::SpC: return "Sp(" + sa + ",C)";
    case Family::U: return "U(" + sa + "," + sb + ")";
    case Family::SpH: return "Sp(" + sa + "," + sb + ")";
    case Family::SOStar: return "SO*(" + sa + ")";
  }
  return "?";
}

GroupLabel gl(Ring ring, std::size_t n) { return {Family::GL, ring, n, 0}; }
GroupLabel orthogonal(std::size_t p, std::size_t q) { return {Family::O, Ring::R, p, q}; }
GroupLabel complex_orthogonal(std::size_t n) { return {Family::OC, Ring::C, n, 0}; }
GroupLabel real_symplectic(std::size_t size) { return {Family::SpR, Ring::R, size, 0}; }
GroupLabel complex_symplectic(std::size_t size) { return {Family::SpC, Ring::C, size, 0}; }
GroupLabel unitary(std::size_t p, std::size_t q) { return {Family::U, Ring::C, p, q}; }
GroupLabel quaternion_unitary(std::size_t p, std::size_t q) { return {Family::SpH, Ring::H, p, q}; }
GroupLabel so_star(std::size_t size) { return {Family::SOStar, Ring::H, size, 0}; }

bool same_group(const GroupLabel& x, const GroupLabel& y) {
  if (x.family != y.family) return false;
  if (x.family == Family::GL && x.ring != y.ring) return false;
  if (x.a == y.a && x.b == y.b) return true;
  return x.indefinite() && x.a == y.b && x.b == y.a;
}

std::size_t real_dim(const GroupName& g) {
  std::size_t d = 0;
  for (const auto& f : g) d += f.real_dim();
  return d;
}

std::string to_string(const GroupName& g) {
  std::string out;
  for (const auto& f : g) {
    if (!out.empty()) out += " × ";
    out += f.to_string();
  }
  return out.empty() ? "1" : out;
}

bool same_group(const GroupName& x, const GroupName& y) {
  if (x.size() != y.size()) return false;
  std::vector<bool> used(y.size(), false);
  for (const auto& f : x) {
    bool found = false;
    for (std::size_t t = 0; t < y.size() && !found; ++t)
      if (!used[t] && same_group(f, y[t])) used[t] = found = true;
    if (!found) return false;
  }
  return true;
}

GroupLabel label_of(const Form& f) {
  const std::size_t n = f.dim();
  switch (f.ring()) {
    case Ring::R:
      if (f.type().kind == FormKind::Skew) return real_symplectic(n);
      {
        const Inertia in = inertia(f);
        return orthogonal(in.positive, in.negative);
      }
    case Ring::C:
      if (f.type().kind == FormKind::Symmetric) return complex_orthogonal(n);
      if (f.type().kind == FormKind::Skew) return complex_symplectic(n);
      {
        const Inertia in = inertia(f);
        return unitary(in.positive, in.negative);
      }
    case Ring::H:
      if (f.type().kind == FormKind::Antihermitian) return so_star(2 * n);
      {
        const Inertia in = inertia(f);
        return quaternion_unitary(in.positive, in.negative);
      }
  }
  throw Error(ErrorKind::WrongKind, "unknown ring");
}

GroupName centralizer_label(const Semiinvolution& j) {
  const std::size_t n = j.dim();
  switch (species(j)) {
    case Species::A: {
      const Scalar root = j.epsilon() == 1 ? Scalar(1) : Scalar::i();
      const Matrix id = Matrix::identity(j.ring(), n);
      GroupName out;
      for (const Scalar& ev : {root, -root}) {
        const std::size_t d = kernel(j.matrix() - id * ev).cols();
        if (d > 0) out.push_back(gl(j.ring(), d));
      }
      return out;
    }
    case Species::B: return {gl(Ring::C, n / 2)};
    case Species::C: return {gl(Ring::H, n / 2)};
    case Species::D: return {gl(Ring::R, n)};
    case Species::E: return {gl(Ring::C, n)};
  }
  return {};
}

GroupDescriptor GroupDescriptor::general(Ring ring, std::size_t n) { return GroupDescriptor(ring, n); }

GroupDescriptor GroupDescriptor::preserving(const Form& f) {
  GroupDescriptor g(f.ring(), f.dim());
  g.form_ = f;
  return g;
}

GroupDescriptor GroupDescriptor::centralizer(const Semiinvolution& j) {
  GroupDescriptor g(j.ring(), j.dim());
  g.j_ = j;
  return g;
}

GroupDescriptor GroupDescriptor::preserving_and_commuting(const Form& f, const Semiinvolution& j) {
  if (f.dim() != j.dim() || f.ring() != j.ring()) throw Error(ErrorKind::DimensionMismatch, "form and semiinvolution disagree");
  GroupDescriptor g(f.ring(), f.dim());
  g.form_ = f;
  g.j_ = j;
  return g;
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> factors) {
  if (factors.empty()) throw Error(ErrorKind::BadParams, "empty product");
  Ring ring = factors.front().ring();
  std::size_t n = 0;
  for (const auto& f : factors) {
    if (f.ring() != ring) throw Error(ErrorKind::RingMismatch, "product factors over different rings");
    n += f.dim();
  }
  if (factors.size() == 1) return factors.front();
  GroupDescriptor g(ring, n);
  g.factors_ = std::move(factors);
  return g;
}

GroupDescriptor GroupDescriptor::stabilizing(const std::vector<Subspace>& subspaces) const {
  if (is_product()) throw Error(ErrorKind::WrongKind, "stabilizers of product descriptors are not supported");
  GroupDescriptor g = *this;
  for (const auto& u : subspaces) {
    if (u.ambient_dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "stabilized subspace has wrong ambient space");
    g.stabilized_.push_back(u);
  }
  return g;
}

bool in_group(const GroupDescriptor& g, const Matrix& m) {
  if (!m.square() || m.rows() != g.dim() || !m.entries_in_ring(g.ring())) return false;
  if (g.is_product()) {
    std::size_t off = 0;
    for (const auto& f : g.factors()) {
      const std::size_t d = f.dim();
      for (std::size_t r = off; r < off + d; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if ((c < off || c >= off + d) && !m(r, c).is_zero()) return false;
      if (!in_group(f, m.block(off, off, d, d))) return false;
      off += d;
    }
    return true;
  }
  if (g.semiinvolution() && !g.semiinvolution()->commutes_with(m)) return false;
  for (const auto& u : g.stabilized())
    if (!u.contains(m * u.basis())) return false;
  if (g.form()) {
    const Form& f = *g.form();
    // preserving a nondegenerate form forces invertibility
    return adjoint_for(f.type(), m) * f.gram() * m == f.gram();
  }
  return is_invertible(m);
}

LieAlgebra lie_algebra(const GroupDescriptor& g) {
  const Ring ring = g.ring();
  const std::size_t n = g.dim();
  LieAlgebra out{ring, n, {}};
  if (g.is_product()) {
    std::size_t off = 0;
    for (const auto& f : g.factors()) {
      for (const auto& x : lie_algebra(f).basis) {
        Matrix big(ring, n, n);
        big.set_block(off, off, x);
        out.basis.push_back(std::move(big));
      }
      off += f.dim();
    }
    return out;
  }
  const std::vector<UnknownShape> shape{{ring, n, n}};
  if (!g.form() && !g.semiinvolution() && g.stabilized().empty()) {
    for (std::size_t c = 0; c < real_coordinate_count(shape); ++c) out.basis.push_back(real_unit(shape, c)[0]);
    return out;
  }
  std::vector<Matrix> annihilators;
  for (const auto& u : g.stabilized()) annihilators.push_back(left_annihilator(u.basis()));
  const RealKernel k = real_kernel(shape, [&](const std::vector<Matrix>& xs) {
    const Matrix& x = xs[0];
    std::vector<Matrix> eqs;
    if (g.form()) {
      const Form& f = *g.form();
      eqs.push_back(adjoint_for(f.type(), x) * f.gram() + f.gram() * x);
    }
    if (g.semiinvolution()) {
      const Semiinvolution& j = *g.semiinvolution();
      eqs.push_back(x * j.matrix() - j.matrix() * (j.antilinear() ? x.conj() : x));
    }
    for (std::size_t t = 0; t < annihilators.size(); ++t) eqs.push_back(annihilators[t] * x * g.stabilized()[t].basis());
    return eqs;
  });
  for (const auto& b : k.basis) out.basis.push_back(b[0]);
  return out;
}

std::size_t lie_algebra_dim(const GroupDescriptor& g) { return lie_algebra(g).dim(); }

Matrix cayley_transform(const Matrix& a) {
  const Matrix id = Matrix::identity(a.ring(), a.rows());
  return (id - a) * inverse(id + a);
}

Matrix cayley_sample(const LieAlgebra& lie, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-kCayleyCoefficientBound, kCayleyCoefficientBound);
  for (int attempt = 0; attempt < kCayleyRetries; ++attempt) {
    Matrix a(lie.ring, lie.n, lie.n);
    for (const auto& x : lie.basis) {
      const int c = coeff(rng);
      if (c != 0) a += x * Scalar(c);
    }
    // 1 + A must be invertible, and so must 1 − A for the image to be a group element.
    const Matrix one = Matrix::identity(lie.ring, lie.n);
    if (!is_invertible(one - a)) continue;
    try {
      return cayley_transform(a);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Singular) throw;
    }
  }
  throw Error(ErrorKind::SamplerExhausted, "1 ± A singular in every draw");
}

IdentityReport centralizer_identities_check(const Form& b, const Semiinvolution& j, const std::vector<Matrix>& samples) {
  const Form d = managing_form(b, j);
  const GroupDescriptor ub = GroupDescriptor::preserving(b);
  const GroupDescriptor ud = GroupDescriptor::preserving(d);
  const GroupDescriptor glj = GroupDescriptor::centralizer(j);
  IdentityReport report;
  for (const auto& g : samples) {
    const bool pb = in_group(ub, g), pd = in_group(ud, g), pj = in_group(glj, g);
    const bool x = pb && pj, y = pb && pd, z = pd && pj;
    ++report.checked;
    if (x) ++report.members;
    if (x != y || y != z) report.counterexamples.push_back(g.to_string());
  }
  return report;
}

}  // namespace symspace
