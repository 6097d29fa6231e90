#include "symspace/catalog.hpp"

#include <algorithm>

#include "symspace/error.hpp"
#include "symspace/linalg.hpp"

namespace symspace {

Bindings Params::bindings() const {
  Bindings b;
  if (n) b['n'] = *n;
  if (m) b['m'] = *m;
  if (p) b['p'] = *p;
  if (q) b['q'] = *q;
  if (k) b['k'] = *k;
  if (l) b['l'] = *l;
  return b;
}

std::string Params::to_string() const {
  std::string out;
  for (const auto& [c, v] : bindings()) out += (out.empty() ? "" : ",") + std::string(1, c) + "=" + std::to_string(v);
  return out;
}

const char* parameter_letters(ParamShape s) {
  switch (s) {
    case ParamShape::PQ: return "pq";
    case ParamShape::N: return "n";
    case ParamShape::PQM: return "pqm";
    case ParamShape::KL: return "kl";
    case ParamShape::NM: return "nm";
  }
  return "";
}

std::string SeriesInfo::title() const { return render_template(g, {}) + "/" + render_template(h, {}); }

namespace {

using FK = FormKind;
constexpr Linearity Lin = Linearity::Linear;
constexpr Linearity Anti = Linearity::Antilinear;

SeriesInfo list1(int id, bool star, Ring ring, FK b, Linearity lin, int eps, int mu, ParamShape shape, int m_factor,
                 std::string g_star, std::string glj, std::string ud, std::string g, std::string h) {
  SeriesInfo s{id, 1, star, ring, shape, std::move(g), std::move(h), std::move(g_star), std::move(glj), std::move(ud), "", b, lin, eps, mu, m_factor, std::nullopt};
  if (star) s.union_text = "∪_{p=0}^{n} " + s.title();
  return s;
}

SeriesInfo list2(int id, Ring ring, FK b, std::string g, std::string h) {
  std::string g_star = g + "^2";
  return {id, 2, false, ring, ParamShape::N, std::move(g), std::move(h), std::move(g_star), "", "", "", b, std::nullopt, 0, 0, 1, std::nullopt};
}

SeriesInfo list3(int id, Ring ring, Linearity lin, int eps, std::string g, std::string h, std::string g_star) {
  std::string glj = g;
  return {id, 3, false, ring, ParamShape::N, std::move(g), std::move(h), std::move(g_star), std::move(glj), "", "", std::nullopt, lin, eps, 0, 1, std::nullopt};
}

SeriesInfo list4(int id, bool star, Ring ring, FK d, ParamShape shape, std::string g, std::string h, std::string g_star) {
  SeriesInfo s{id, 4, star, ring, shape, std::move(g), std::move(h), std::move(g_star), "", "", "", std::nullopt, std::nullopt, 0, 0, 1, d};
  if (star) s.union_text = "∪_{r+s=m, r≤p, s≤q} " + s.title();
  return s;
}

SeriesInfo list5(int id, Ring ring) {
  const std::string k = to_string(ring);
  return {id, 5, false, ring, ParamShape::PQ, "GL(p+q," + k + ")", "GL(p," + k + ")×GL(q," + k + ")", "GL(p+q," + k + ")^2", "", "", "", std::nullopt, std::nullopt, 0, 0, 1, std::nullopt};
}

std::vector<SeriesInfo> make_registry() {
  const Ring R = Ring::R, C = Ring::C, H = Ring::H;
  const auto PQ = ParamShape::PQ, N = ParamShape::N;
  std::vector<SeriesInfo> r{
      // id star ring B lin eps mu shape m   G*  GL^J  U(D)  G  H
      list1(1, false, R, FK::Symmetric, Lin, 1, 1, PQ, 1, "O(p+q,p+q)", "GL(p+q,R)^2", "O(2p,2q)", "O(p,q)^2", "O(p,q)"),
      list1(2, false, R, FK::Skew, Lin, 1, 1, N, 2, "Sp(4n,R)", "GL(2n,R)^2", "Sp(4n,R)", "Sp(2n,R)^2", "Sp(2n,R)"),
      list1(3, true, R, FK::Skew, Lin, 1, -1, N, 1, "Sp(2n,R)", "GL(n,R)^2", "O(n,n)", "GL(n,R)", "O(p,n-p)"),
      list1(4, false, R, FK::Symmetric, Lin, 1, -1, N, 2, "O(2n,2n)", "GL(2n,R)^2", "Sp(4n,R)", "GL(2n,R)", "Sp(2n,R)"),
      list1(5, true, R, FK::Symmetric, Lin, -1, -1, N, 1, "O(n,n)", "GL(n,C)", "O(n,n)", "O(n,C)", "O(p,n-p)"),
      list1(6, false, R, FK::Skew, Lin, -1, -1, N, 2, "Sp(4n,R)", "GL(2n,C)", "Sp(4n,R)", "Sp(2n,C)", "Sp(2n,R)"),
      list1(7, false, R, FK::Symmetric, Lin, -1, 1, N, 2, "O(2n,2n)", "GL(2n,C)", "Sp(4n,R)", "U(n,n)", "Sp(2n,R)"),
      list1(8, false, R, FK::Skew, Lin, -1, 1, PQ, 1, "Sp(2(p+q),R)", "GL(p+q,C)", "O(2p,2q)", "U(p,q)", "O(p,q)"),
      list1(9, false, C, FK::Symmetric, Lin, 1, 1, N, 1, "O(2n,C)", "GL(n,C)^2", "O(2n,C)", "O(n,C)^2", "O(n,C)"),
      list1(10, false, C, FK::Skew, Lin, 1, 1, N, 2, "Sp(4n,C)", "GL(2n,C)^2", "Sp(4n,C)", "Sp(2n,C)^2", "Sp(2n,C)"),
      list1(11, false, C, FK::Hermitian, Lin, 1, 1, PQ, 1, "U(p+q,p+q)", "GL(p+q,C)^2", "U(2p,2q)", "U(p,q)^2", "U(p,q)"),
      list1(12, false, C, FK::Symmetric, Lin, 1, -1, N, 2, "O(4n,C)", "GL(2n,C)^2", "Sp(4n,C)", "GL(2n,C)", "Sp(2n,C)"),
      list1(13, false, C, FK::Skew, Lin, 1, -1, N, 1, "Sp(2n,C)", "GL(n,C)^2", "O(2n,C)", "GL(n,C)", "O(n,C)"),
      list1(14, true, C, FK::Hermitian, Lin, 1, -1, N, 1, "U(n,n)", "GL(n,C)^2", "U(n,n)", "GL(n,C)", "U(p,n-p)"),
      list1(15, true, C, FK::Skew, Anti, 1, 1, N, 1, "Sp(2n,C)", "GL(2n,R)", "U(n,n)", "Sp(2n,R)", "U(p,n-p)"),
      list1(16, false, C, FK::Symmetric, Anti, 1, 1, PQ, 1, "O(2(p+q),C)", "GL(2(p+q),R)", "U(2p,2q)", "O(2p,2q)", "U(p,q)"),
      list1(17, false, C, FK::Hermitian, Anti, 1, 1, N, 1, "U(n,n)", "GL(2n,R)", "O(2n,C)", "O(n,n)", "O(n,C)"),
      list1(18, false, C, FK::Hermitian, Anti, 1, -1, N, 2, "U(2n,2n)", "GL(4n,R)", "Sp(4n,C)", "Sp(4n,R)", "Sp(2n,C)"),
      list1(19, false, C, FK::Skew, Anti, -1, 1, PQ, 1, "Sp(2(p+q),C)", "GL(p+q,H)", "U(2p,2q)", "Sp(p,q)", "U(p,q)"),
      list1(20, true, C, FK::Symmetric, Anti, -1, 1, N, 1, "O(2n,C)", "GL(n,H)", "U(n,n)", "SO*(2n)", "U(p,n-p)"),
      list1(21, false, C, FK::Hermitian, Anti, -1, 1, N, 2, "U(2n,2n)", "GL(2n,H)", "Sp(4n,C)", "Sp(n,n)", "Sp(2n,C)"),
      list1(22, false, C, FK::Hermitian, Anti, -1, -1, N, 1, "U(n,n)", "GL(n,H)", "O(2n,C)", "SO*(2n)", "O(n,C)"),
      list1(23, false, H, FK::Hermitian, Lin, 1, 1, PQ, 1, "Sp(p+q,p+q)", "GL(p+q,H)^2", "Sp(2p,2q)", "Sp(p,q)^2", "Sp(p,q)"),
      list1(24, false, H, FK::Antihermitian, Lin, 1, 1, N, 1, "SO*(4n)", "GL(n,H)^2", "SO*(4n)", "SO*(2n)^2", "SO*(2n)"),
      list1(25, false, H, FK::Hermitian, Lin, 1, -1, N, 1, "Sp(n,n)", "GL(n,H)^2", "SO*(4n)", "GL(n,H)", "SO*(2n)"),
      list1(26, true, H, FK::Antihermitian, Lin, 1, -1, N, 1, "SO*(4n)", "GL(n,H)^2", "Sp(n,n)", "GL(n,H)", "Sp(p,n-p)"),
      list1(27, false, H, FK::Antihermitian, Lin, -1, 1, PQ, 1, "SO*(4(p+q))", "GL(2(p+q),C)", "Sp(2p,2q)", "U(2p,2q)", "Sp(p,q)"),
      list1(28, false, H, FK::Hermitian, Lin, -1, 1, N, 1, "Sp(n,n)", "GL(2n,C)", "SO*(4n)", "U(n,n)", "SO*(2n)"),
      list1(29, false, H, FK::Antihermitian, Lin, -1, -1, N, 1, "SO*(4n)", "GL(2n,C)", "SO*(4n)", "O(2n,C)", "SO*(2n)"),
      list1(30, true, H, FK::Hermitian, Lin, -1, -1, N, 1, "Sp(n,n)", "GL(2n,C)", "Sp(n,n)", "Sp(2n,C)", "Sp(p,n-p)"),

      list2(31, R, FK::Symmetric, "O(n,n)", "GL(n,R)"),
      list2(32, R, FK::Skew, "Sp(2n,R)", "GL(n,R)"),
      list2(33, C, FK::Symmetric, "O(2n,C)", "GL(n,C)"),
      list2(34, C, FK::Skew, "Sp(2n,C)", "GL(n,C)"),
      list2(35, C, FK::Hermitian, "U(n,n)", "GL(n,C)"),
      list2(36, H, FK::Hermitian, "Sp(n,n)", "GL(n,H)"),
      list2(37, H, FK::Antihermitian, "SO*(4n)", "GL(n,H)"),

      list3(38, R, Lin, 1, "GL(n,R)^2", "GL(n,R)", "GL(2n,R)"),
      list3(39, R, Lin, -1, "GL(n,C)", "GL(n,R)", "GL(2n,R)"),
      list3(40, C, Lin, 1, "GL(n,C)^2", "GL(n,C)", "GL(2n,C)"),
      list3(41, C, Anti, 1, "GL(2n,R)", "GL(n,C)", "GL(2n,C)"),
      list3(42, C, Anti, -1, "GL(n,H)", "GL(n,C)", "GL(2n,C)"),
      list3(43, H, Lin, 1, "GL(n,H)^2", "GL(n,H)", "GL(2n,H)"),
      list3(44, H, Lin, -1, "GL(2n,C)", "GL(n,H)", "GL(2n,H)"),

      list4(45, true, R, FK::Symmetric, ParamShape::PQM, "O(p,q)", "O(r,s)×O(p-r,q-s)", "GL(p+q,R)"),
      list4(46, false, R, FK::Skew, ParamShape::KL, "Sp(2(k+l),R)", "Sp(2k,R)×Sp(2l,R)", "GL(2(k+l),R)"),
      list4(47, false, C, FK::Symmetric, ParamShape::NM, "O(n+m,C)", "O(n,C)×O(m,C)", "GL(n+m,C)"),
      list4(48, false, C, FK::Skew, ParamShape::KL, "Sp(2(k+l),C)", "Sp(2k,C)×Sp(2l,C)", "GL(2(k+l),C)"),
      list4(49, true, C, FK::Hermitian, ParamShape::PQM, "U(p,q)", "U(r,s)×U(p-r,q-s)", "GL(p+q,C)"),
      list4(50, true, H, FK::Hermitian, ParamShape::PQM, "Sp(p,q)", "Sp(r,s)×Sp(p-r,q-s)", "GL(p+q,H)"),
      list4(51, false, H, FK::Antihermitian, ParamShape::NM, "SO*(2(m+n))", "SO*(2m)×SO*(2n)", "GL(m+n,H)"),

      list5(52, R),
      list5(53, C),
      list5(54, H),
  };
  r[19].union_text += "  (printed as p=1..n)";
  return r;
}

}  // namespace

const std::vector<SeriesInfo>& registry() {
  static const std::vector<SeriesInfo> r = make_registry();
  return r;
}

const SeriesInfo& series(int id) {
  if (id < 1 || id > static_cast<int>(registry().size())) throw Error(ErrorKind::UnknownEntry, "no series with id " + std::to_string(id));
  return registry()[static_cast<std::size_t>(id - 1)];
}

namespace {

long need(const std::optional<long>& v, char name, int id) {
  if (!v) throw Error(ErrorKind::BadParams, "series " + std::to_string(id) + " needs parameter " + name);
  return *v;
}

// K-dimension of Q1 for List 1.
std::size_t list1_m(const SeriesInfo& s, const Params& p) {
  if (s.shape == ParamShape::PQ) return static_cast<std::size_t>(*p.p + *p.q);
  return static_cast<std::size_t>(s.m_factor * *p.n);
}

}  // namespace

void validate_params(const SeriesInfo& s, const Params& p) {
  const std::string letters = parameter_letters(s.shape);
  for (const auto& [c, v] : p.bindings())
    if (letters.find(c) == std::string::npos)
      throw Error(ErrorKind::BadParams, "series " + std::to_string(s.id) + " takes parameters " + letters + ", not " + c);
  for (char c : letters) {
    const long v = need(p.bindings().count(c) ? std::optional<long>(p.bindings().at(c)) : std::nullopt, c, s.id);
    if (v < 0) throw Error(ErrorKind::BadParams, std::string("parameter ") + c + " must be nonnegative");
  }
  auto bad = [&](const std::string& why) { throw Error(ErrorKind::BadParams, "series " + std::to_string(s.id) + ": " + why); };
  switch (s.shape) {
    case ParamShape::PQ:
      if (s.list == 5 && (*p.p < 1 || *p.q < 1)) bad("p, q ≥ 1 required");
      if (*p.p + *p.q < 1) bad("p + q ≥ 1 required");
      break;
    case ParamShape::N:
      if (*p.n < 1) bad("n ≥ 1 required");
      break;
    case ParamShape::PQM:
      if (*p.m < 1 || *p.m > *p.p + *p.q - 1) bad("1 ≤ m ≤ p + q − 1 required");
      break;
    case ParamShape::KL:
      if (*p.k < 1 || *p.l < 1) bad("k, l ≥ 1 required");
      break;
    case ParamShape::NM:
      if (*p.n < 1 || *p.m < 1) bad("n, m ≥ 1 required");
      break;
  }
}

std::size_t ambient_dim(const SeriesInfo& s, const Params& p) {
  validate_params(s, p);
  switch (s.list) {
    case 1: return 2 * list1_m(s, p);
    case 2:
    case 3: return static_cast<std::size_t>(2 * *p.n);
    case 4:
      if (s.shape == ParamShape::PQM) return static_cast<std::size_t>(*p.p + *p.q);
      if (s.shape == ParamShape::KL) return static_cast<std::size_t>(2 * (*p.k + *p.l));
      return static_cast<std::size_t>(*p.n + *p.m);
    default: return static_cast<std::size_t>(*p.p + *p.q);
  }
}

std::vector<Params> enumerate_params(const SeriesInfo& s, std::size_t max_dim) {
  std::vector<Params> out;
  const long lim = static_cast<long>(max_dim);
  auto consider = [&](const Params& p) {
    try {
      if (ambient_dim(s, p) <= max_dim) out.push_back(p);
    } catch (const Error&) {
    }
  };
  for (long a = 0; a <= lim; ++a)
    for (long b = 0; b <= lim; ++b) {
      switch (s.shape) {
        case ParamShape::PQ: consider({.p = a, .q = b}); break;
        case ParamShape::N:
          if (b == 0) consider({.n = a});
          break;
        case ParamShape::PQM:
          for (long c = 0; c <= lim; ++c) consider({.m = c, .p = a, .q = b});
          break;
        case ParamShape::KL: consider({.k = a, .l = b}); break;
        case ParamShape::NM: consider({.n = a, .m = b}); break;
      }
    }
  return out;
}

std::string SeriesEntry::title() const {
  Bindings b = params.bindings();
  if (info->list == 1 && info->star) b.erase('p');
  if (info->list == 4 && info->star) {
    const long r = std::min(*params.m, *params.p);
    b['r'] = r;
    b['s'] = *params.m - r;
  }
  std::string t = render_template(info->g, b) + "/" + render_template(info->h, b);
  return t;
}

std::string SeriesEntry::union_text() const {
  if (!info->star) return "";
  Bindings b = params.bindings();
  std::string prefix;
  if (info->list == 1) {
    b.erase('p');
    prefix = "∪_{p=0}^{" + std::to_string(*params.n) + "} ";
  } else {
    prefix = "∪_{r+s=" + std::to_string(*params.m) + ", r≤" + std::to_string(*params.p) + ", s≤" + std::to_string(*params.q) + "} ";
  }
  std::string out = prefix + render_template(info->g, b) + "/" + render_template(info->h, b);
  if (info->id == 20) out += "  (printed as p=1..n)";
  return out;
}

namespace {

Matrix scalar_identity(Ring ring, std::size_t n, const Scalar& s) { return Matrix::identity(ring, n) * s; }

// Z with adj_D(Z) = s_D·Z, where adj_D is the adjoint for D's linearity.
Matrix list1_z(const SeriesInfo& s, const Params& p, std::size_t m, bool d_bilinear, int s_d) {
  const Ring ring = s.ring;
  if (s_d == 1) {
    if (s.shape == ParamShape::PQ) return signature_gram(ring, static_cast<std::size_t>(*p.p), static_cast<std::size_t>(*p.q));
    return Matrix::identity(ring, m);
  }
  if (d_bilinear) return standard_skew_gram(ring, m / 2);
  return scalar_identity(ring, m, ring == Ring::C ? Scalar::i() : Scalar::j());
}

Semiinvolution list1_j(const SeriesInfo& s, std::size_t m, const Matrix& z) {
  const Ring ring = s.ring;
  const bool anti = *s.linearity == Linearity::Antilinear;
  // J = [[0, ε·Z⁻¹], [Z, 0]], with conj(Z)⁻¹ in the antilinear case.
  Matrix c(ring, 2 * m, 2 * m);
  const Matrix zi = inverse(anti ? z.conj() : z);
  c.set_block(0, m, zi * Scalar(s.epsilon));
  c.set_block(m, 0, z);
  return Semiinvolution(ring, *s.linearity, c, s.epsilon);
}

void build_list1(SeriesEntry& e) {
  const SeriesInfo& s = *e.info;
  const std::size_t m = list1_m(s, e.params);
  e.m = m;
  e.dim = 2 * m;
  const FormType bt{s.ring, *s.b_kind};
  const int s_b = bt.sign();
  const int s_d = s.mu * s.epsilon * s_b;
  const bool d_bilinear = s.ring == Ring::R || (bt.bilinear() != (*s.linearity == Linearity::Antilinear));
  if (s_d == -1 && d_bilinear && m % 2 != 0) throw Error(ErrorKind::BadParams, "skew managing form needs even dim Q1");

  e.b = Form(bt, hyperbolic_gram(s.ring, m, s_b));
  std::vector<std::size_t> first(m), second(m);
  for (std::size_t t = 0; t < m; ++t) {
    first[t] = t;
    second[t] = m + t;
  }
  e.q1 = Subspace::coordinate(s.ring, e.dim, first);
  e.q2 = Subspace::coordinate(s.ring, e.dim, second);

  Matrix z = list1_z(s, e.params, m, d_bilinear, s_d);
  for (int attempt = 0; attempt < 2; ++attempt) {
    e.j = list1_j(s, m, z);
    e.d = managing_form(*e.b, *e.j);
    if (!s.star) break;
    // ★: place the base point in the definite component (p = n).
    const GroupLabel h = label_of(restricted_managing_form(e));
    if (h.b == 0) break;
    z = -z;
  }
  const int mu = detect_mu(*e.b, *e.j);
  if (mu != s.mu) throw Error(ErrorKind::Inconsistent, "canonical pair has μ = " + std::to_string(mu));
  if (e.j->apply(e.q1) != e.q2) throw Error(ErrorKind::Inconsistent, "J does not exchange the base subspaces");

  e.g = GroupDescriptor::preserving_and_commuting(*e.b, *e.j);
  e.g_star = GroupDescriptor::preserving(*e.b);
  e.glj = GroupDescriptor::centralizer(*e.j);
  e.ud = GroupDescriptor::preserving(*e.d);
  e.h = GroupDescriptor::preserving(restricted_managing_form(e));

  Bindings b = e.params.bindings();
  if (s.star) b['p'] = *e.params.n;
  e.expected_g = evaluate_template(s.g, b);
  e.expected_h = evaluate_template(s.h, b);
  e.expected_g_star = evaluate_template(s.g_star, b);
  e.expected_glj = evaluate_template(s.glj, b);
  e.expected_ud = evaluate_template(s.ud, b);
}

void build_list2(SeriesEntry& e) {
  const SeriesInfo& s = *e.info;
  const std::size_t n = static_cast<std::size_t>(*e.params.n);
  e.m = n;
  e.dim = 2 * n;
  const FormType bt{s.ring, *s.b_kind};
  e.b = Form(bt, hyperbolic_gram(s.ring, n, bt.sign()));
  std::vector<std::size_t> first(n), second(n);
  for (std::size_t t = 0; t < n; ++t) {
    first[t] = t;
    second[t] = n + t;
  }
  e.q1 = Subspace::coordinate(s.ring, e.dim, first);
  e.q2 = Subspace::coordinate(s.ring, e.dim, second);
  e.g = GroupDescriptor::preserving(*e.b);
  e.g_star = GroupDescriptor::product({e.g, e.g});
  e.h = GroupDescriptor::general(s.ring, n);
}

void build_list3(SeriesEntry& e) {
  const SeriesInfo& s = *e.info;
  const std::size_t n = static_cast<std::size_t>(*e.params.n);
  e.m = n;
  e.dim = 2 * n;
  Matrix c(s.ring, 2 * n, 2 * n);
  c.set_block(0, n, Matrix::identity(s.ring, n) * Scalar(s.epsilon));
  c.set_block(n, 0, Matrix::identity(s.ring, n));
  e.j = Semiinvolution(s.ring, *s.linearity, c, s.epsilon);
  std::vector<std::size_t> first(n);
  for (std::size_t t = 0; t < n; ++t) first[t] = t;
  e.q1 = Subspace::coordinate(s.ring, e.dim, first);
  e.q2 = e.j->apply(e.q1);
  e.g = GroupDescriptor::centralizer(*e.j);
  e.glj = e.g;
  e.g_star = GroupDescriptor::general(s.ring, e.dim);
  e.h = GroupDescriptor::general(s.ring, n);
  e.expected_glj = evaluate_template(s.glj, e.params.bindings());
}

void build_list4(SeriesEntry& e, Bindings& b) {
  const SeriesInfo& s = *e.info;
  const Params& p = e.params;
  std::vector<std::size_t> idx;
  Matrix gram;
  switch (s.shape) {
    case ParamShape::PQM: {
      const std::size_t pp = static_cast<std::size_t>(*p.p), qq = static_cast<std::size_t>(*p.q);
      e.m = static_cast<std::size_t>(*p.m);
      gram = signature_gram(s.ring, pp, qq);
      const std::size_t r = std::min(e.m, pp), sn = e.m - r;
      for (std::size_t t = 0; t < r; ++t) idx.push_back(t);
      for (std::size_t t = 0; t < sn; ++t) idx.push_back(pp + t);
      b['r'] = static_cast<long>(r);
      b['s'] = static_cast<long>(sn);
      break;
    }
    case ParamShape::KL:
      e.m = static_cast<std::size_t>(2 * *p.k);
      gram = paired_skew_gram(s.ring, static_cast<std::size_t>(*p.k + *p.l));
      for (std::size_t t = 0; t < e.m; ++t) idx.push_back(t);
      break;
    default: {
      // 47: (n, m) with Q1 of dimension n; 51: SO*(2m)×SO*(2n) with Q1 of dimension m.
      const std::size_t total = static_cast<std::size_t>(*p.n + *p.m);
      e.m = static_cast<std::size_t>(s.id == 51 ? *p.m : *p.n);
      gram = s.ring == Ring::H ? quaternion_antihermitian_gram(total) : Matrix::identity(s.ring, total);
      for (std::size_t t = 0; t < e.m; ++t) idx.push_back(t);
      break;
    }
  }
  e.dim = gram.rows();
  e.d = Form({s.ring, *s.d_kind}, gram);
  e.q1 = Subspace::coordinate(s.ring, e.dim, idx);
  e.q2 = orthogonal_complement(*e.d, e.q1);
  e.g = GroupDescriptor::preserving(*e.d);
  e.g_star = GroupDescriptor::general(s.ring, e.dim);
  const Form d1(e.d->type(), restricted_gram(*e.d, e.q1.basis()));
  const Form d2(e.d->type(), restricted_gram(*e.d, e.q2.basis()));
  e.h = GroupDescriptor::product({GroupDescriptor::preserving(d1), GroupDescriptor::preserving(d2)});
}

void build_list5(SeriesEntry& e) {
  const SeriesInfo& s = *e.info;
  const std::size_t pp = static_cast<std::size_t>(*e.params.p), qq = static_cast<std::size_t>(*e.params.q);
  e.m = pp;
  e.dim = pp + qq;
  std::vector<std::size_t> first, second;
  for (std::size_t t = 0; t < e.dim; ++t) (t < pp ? first : second).push_back(t);
  e.q1 = Subspace::coordinate(s.ring, e.dim, first);
  e.q2 = Subspace::coordinate(s.ring, e.dim, second);
  e.g = GroupDescriptor::general(s.ring, e.dim);
  e.g_star = GroupDescriptor::product({e.g, e.g});
  e.h = GroupDescriptor::product({GroupDescriptor::general(s.ring, pp), GroupDescriptor::general(s.ring, qq)});
}

}  // namespace

Form restricted_managing_form(const SeriesEntry& e) {
  if (!e.d) throw Error(ErrorKind::WrongKind, "series has no managing form");
  return Form(e.d->type(), restricted_gram(*e.d, e.q1.basis()));
}

SeriesEntry build(int id, const Params& params) {
  const SeriesInfo& s = series(id);
  validate_params(s, params);
  SeriesEntry e{&s, params, s.ring, 0, 0, std::nullopt, std::nullopt, std::nullopt,
                GroupDescriptor::general(s.ring, 1), GroupDescriptor::general(s.ring, 1), GroupDescriptor::general(s.ring, 1),
                std::nullopt, std::nullopt, Subspace(), Subspace(), {}, {}, {}, std::nullopt, std::nullopt};
  Bindings b = params.bindings();
  switch (s.list) {
    case 1: build_list1(e); return e;
    case 2: build_list2(e); break;
    case 3: build_list3(e); break;
    case 4: build_list4(e, b); break;
    default: build_list5(e); break;
  }
  e.expected_g = evaluate_template(s.g, b);
  e.expected_h = evaluate_template(s.h, b);
  e.expected_g_star = evaluate_template(s.g_star, b);
  return e;
}

Matrix stabilizer_embed(const SeriesEntry& e, const Matrix& h1) {
  if (e.list() != 1) throw Error(ErrorKind::WrongKind, "stabilizer embedding is defined for split pairs");
  const Form d1 = restricted_managing_form(e);
  if (!in_group(GroupDescriptor::preserving(d1), h1)) throw Error(ErrorKind::NotInUDprime, "h1 does not preserve D'");
  const Matrix q1 = e.q1.basis();
  const Matrix p = hcat(q1, e.j->apply(q1));
  const Matrix h2 = e.j->antilinear() ? h1.conj() : h1;
  return p * block_diag(h1, h2) * inverse(p);
}

void corrupt_expected_groups(SeriesEntry& e) {
  auto bump = [](GroupName& g) {
    if (g.empty()) return;
    GroupLabel& f = g.front();
    if (f.family == Family::SpR || f.family == Family::SpC || f.family == Family::SOStar)
      f.a += 2;
    else
      f.a += 1;
  };
  if (e.expected_ud)
    bump(*e.expected_ud);
  else
    bump(e.expected_g);
}

}  // namespace symspace
