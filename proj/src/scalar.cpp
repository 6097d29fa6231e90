#include "symspace/scalar.hpp"

#include <ostream>
#include <sstream>

#include "symspace/error.hpp"

namespace symspace {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::WrongKind: return "WrongKind";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::NotConsistent: return "NotConsistent";
    case ErrorKind::NotPlusMinusOne: return "NotPlusMinusOne";
    case ErrorKind::SamplerExhausted: return "SamplerExhausted";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NotInUDprime: return "NotInUDprime";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::NotStar: return "NotStar";
    case ErrorKind::NotTransverse: return "NotTransverse";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::ChartBoundary: return "ChartBoundary";
    case ErrorKind::WrongSpecies: return "WrongSpecies";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

const char* to_string(Ring r) {
  switch (r) {
    case Ring::R: return "R";
    case Ring::C: return "C";
    case Ring::H: return "H";
  }
  return "?";
}

Ring ring_from_string(const std::string& s) {
  if (s == "R") return Ring::R;
  if (s == "C") return Ring::C;
  if (s == "H") return Ring::H;
  throw Error(ErrorKind::Parse, "unknown ring tag '" + s + "'");
}

bool Scalar::in_ring(Ring r) const {
  switch (r) {
    case Ring::R: return is_real();
    case Ring::C: return is_complex();
    case Ring::H: return true;
  }
  return false;
}

Ring Scalar::min_ring() const {
  if (is_real()) return Ring::R;
  if (is_complex()) return Ring::C;
  return Ring::H;
}

Rational Scalar::norm() const {
  Rational n = c_[0] * c_[0];
  for (int t = 1; t < 4; ++t)
    if (sgn(c_[t]) != 0) n += c_[t] * c_[t];
  return n;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Singular, "inverse of zero scalar");
  if (is_real()) return Scalar(Rational(1) / c_[0]);
  Rational n = norm();
  Scalar r = conj();
  for (int t = 0; t < 4; ++t) r.c_[t] /= n;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (int t = 0; t < 4; ++t)
    if (sgn(o.c_[t]) != 0) c_[t] += o.c_[t];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (int t = 0; t < 4; ++t)
    if (sgn(o.c_[t]) != 0) c_[t] -= o.c_[t];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const bool xr = x.is_real();
  const bool yr = y.is_real();
  if (xr && yr) return Scalar(x.c_[0] * y.c_[0]);
  if (xr) return {x.c_[0] * y.c_[0], x.c_[0] * y.c_[1], x.c_[0] * y.c_[2], x.c_[0] * y.c_[3]};
  if (yr) return {x.c_[0] * y.c_[0], x.c_[1] * y.c_[0], x.c_[2] * y.c_[0], x.c_[3] * y.c_[0]};
  const auto& [a1, b1, c1, d1] = x.c_;
  const auto& [a2, b2, c2, d2] = y.c_;
  if (x.is_complex() && y.is_complex()) return {a1 * a2 - b1 * b2, a1 * b2 + b1 * a2};
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
          a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
          a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

std::string Scalar::to_string() const {
  static const char* units[4] = {"", "i", "j", "k"};
  std::ostringstream os;
  bool any = false;
  for (int t = 0; t < 4; ++t) {
    if (sgn(c_[t]) == 0) continue;
    std::string s = c_[t].get_str();
    if (any && s[0] != '-') os << '+';
    if (t > 0 && (s == "1" || s == "-1"))
      os << (s == "-1" ? "-" : "");
    else
      os << s;
    os << units[t];
    any = true;
  }
  if (!any) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace symspace
