#include "symspace/wire.hpp"

#include "symspace/error.hpp"

namespace symspace::wire {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) fail("not a rational: '" + s + "'");
  if (r.get_den() == 0) fail("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Ring ring_field(const json& j) {
  const json& r = field(j, "ring");
  if (!r.is_string()) fail("ring must be a string");
  try {
    return ring_from_string(r.get<std::string>());
  } catch (const Error&) {
    fail("unknown ring '" + r.get<std::string>() + "'");
  }
}

long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<long>();
}

}  // namespace

json to_json(const Scalar& s, Ring ring) {
  json out = json::array();
  for (int u = 0; u < real_rank(ring); ++u) out.push_back(s[u].get_str());
  return out;
}

Scalar scalar_from_json(const json& j, Ring ring) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(real_rank(ring)))
    fail(std::string("a scalar over ") + to_string(ring) + " is an array of " + std::to_string(real_rank(ring)) + " rationals");
  Scalar s;
  for (std::size_t u = 0; u < j.size(); ++u) {
    if (!j[u].is_string()) fail("scalar components are strings");
    s[static_cast<int>(u)] = rational_from_string(j[u].get<std::string>());
  }
  return s;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c), m.ring()));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, Ring ring) {
  if (!j.is_array()) fail("a matrix is an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  return matrix_from_json(j, ring, rows, cols);
}

Matrix matrix_from_json(const json& j, Ring ring, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) fail("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) fail("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], ring);
  }
  return m;
}

json to_json(const Subspace& u) {
  return {{"ring", to_string(u.ring())}, {"ambient_dim", u.ambient_dim()}, {"basis", to_json(u.basis())}};
}

Subspace subspace_from_json(const json& j) {
  const Ring ring = ring_field(j);
  const long n = integer(field(j, "ambient_dim"), "ambient_dim");
  if (n < 0) fail("ambient_dim must be nonnegative");
  const json& basis = field(j, "basis");
  const std::size_t cols = basis.is_array() && !basis.empty() && basis[0].is_array() ? basis[0].size() : 0;
  const Matrix b = matrix_from_json(basis, ring, static_cast<std::size_t>(n), cols);
  if (b.cols() > 0 && Subspace(b).dim() != b.cols()) fail("basis columns are dependent");
  return Subspace(b);
}

json to_json(const Form& f) {
  return {{"ring", to_string(f.ring())}, {"kind", to_string(f.type().kind)}, {"gram", to_json(f.gram())}};
}

Form form_from_json(const json& j) {
  const Ring ring = ring_field(j);
  const json& kind = field(j, "kind");
  if (!kind.is_string()) fail("kind must be a string");
  FormKind k;
  try {
    k = form_kind_from_string(kind.get<std::string>());
  } catch (const Error&) {
    fail("unknown form kind '" + kind.get<std::string>() + "'");
  }
  return Form({ring, k}, matrix_from_json(field(j, "gram"), ring));
}

json to_json(const Semiinvolution& s) {
  return {{"ring", to_string(s.ring())}, {"linearity", to_string(s.linearity())}, {"epsilon", s.epsilon()}, {"matrix", to_json(s.matrix())}};
}

Semiinvolution semiinvolution_from_json(const json& j) {
  const Ring ring = ring_field(j);
  const json& lin = field(j, "linearity");
  if (!lin.is_string()) fail("linearity must be a string");
  Linearity l;
  try {
    l = linearity_from_string(lin.get<std::string>());
  } catch (const Error&) {
    fail("unknown linearity '" + lin.get<std::string>() + "'");
  }
  const long eps = integer(field(j, "epsilon"), "epsilon");
  return Semiinvolution(ring, l, matrix_from_json(field(j, "matrix"), ring), static_cast<int>(eps));
}

json to_json(const Params& p) {
  json out = json::object();
  for (const auto& [c, v] : p.bindings()) out[std::string(1, c)] = v;
  return out;
}

Params params_from_json(const json& j) {
  if (!j.is_object()) fail("params must be an object");
  Params p;
  for (const auto& [key, value] : j.items()) {
    const long v = integer(value, "parameter");
    if (key == "n") p.n = v;
    else if (key == "m") p.m = v;
    else if (key == "p") p.p = v;
    else if (key == "q") p.q = v;
    else if (key == "k") p.k = v;
    else if (key == "l") p.l = v;
    else fail("unknown parameter '" + key + "'");
  }
  return p;
}

json to_json(const SpacePoint& pt) {
  return {{"entry", pt.entry}, {"params", to_json(pt.params)}, {"Q1", to_json(pt.q1)}, {"Q2", to_json(pt.q2)}};
}

SpacePoint point_from_json(const json& j) {
  SpacePoint pt;
  pt.entry = static_cast<int>(integer(field(j, "entry"), "entry"));
  pt.params = params_from_json(field(j, "params"));
  pt.q1 = subspace_from_json(field(j, "Q1"));
  pt.q2 = subspace_from_json(field(j, "Q2"));
  return pt;
}

json to_json(const AngularCoords& c) { return {{"ring", to_string(c.m.ring())}, {"M", to_json(c.m)}, {"N", to_json(c.n)}}; }

AngularCoords coords_from_json(const json& j) {
  const Ring ring = ring_field(j);
  return {matrix_from_json(field(j, "M"), ring), matrix_from_json(field(j, "N"), ring)};
}

json to_json(const DoubleRatio& d) {
  // Over H the coefficients are complex: charpoly of the complexified operator.
  const Ring coeff_ring = d.ring == Ring::H ? Ring::C : d.ring;
  json coeffs = json::array();
  for (const auto& c : d.charpoly) coeffs.push_back(to_json(c, coeff_ring));
  return {{"ring", to_string(d.ring)}, {"degree", d.degree}, {"charpoly", coeffs}};
}

DoubleRatio double_ratio_from_json(const json& j) {
  const Ring ring = ring_field(j);
  const long degree = integer(field(j, "degree"), "degree");
  const json& coeffs = field(j, "charpoly");
  if (!coeffs.is_array() || degree < 0 || coeffs.size() != static_cast<std::size_t>(degree) + 1) fail("charpoly must have degree + 1 coefficients");
  DoubleRatio d{ring, static_cast<std::size_t>(degree), {}};
  for (const auto& c : coeffs) d.charpoly.push_back(scalar_from_json(c, ring == Ring::H ? Ring::C : ring));
  return d;
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"entry", r.id}, {"params", to_json(r.params)}, {"pass", r.pass()}, {"checks", checks}};
}

json describe(const SeriesEntry& e) {
  const SeriesInfo& s = *e.info;
  json out{{"entry", s.id},
           {"list", s.list},
           {"star", s.star},
           {"params", to_json(e.params)},
           {"space", e.title()},
           {"ring", to_string(e.ring)},
           {"ambient_dim", e.dim},
           {"G", to_string(e.expected_g)},
           {"H", to_string(e.expected_h)},
           {"G_star", to_string(e.expected_g_star)},
           {"base_point", to_json(base_point(e))}};
  if (s.star) {
    out["union"] = s.union_text;
    out["union_instance"] = e.union_text();
  }
  if (e.b) out["B"] = to_json(*e.b);
  if (e.j) out["J"] = to_json(*e.j);
  if (e.list() == 1) {
    out["mu"] = detect_mu(*e.b, *e.j);
    out["species"] = std::string(1, to_char(species(*e.j)));
  }
  if (e.d) out["D"] = to_json(*e.d);
  if (e.expected_glj) out["GL_J"] = to_string(*e.expected_glj);
  if (e.d) out["U_D"] = to_string(GroupName{label_of(*e.d)});
  return out;
}

}  // namespace symspace::wire
