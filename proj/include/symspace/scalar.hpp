#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>

namespace symspace {

using Rational = mpq_class;

/// The three division rings. R ⊂ C ⊂ H, with C embedded as span{1, i}.
enum class Ring { R = 0, C = 1, H = 2 };

/// Number of real coordinates of one ring element.
constexpr int real_rank(Ring r) { return r == Ring::R ? 1 : (r == Ring::C ? 2 : 4); }
constexpr Ring join(Ring a, Ring b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }
const char* to_string(Ring r);
Ring ring_from_string(const std::string& s);

/// A rational quaternion a + b i + c j + d k.
///
/// Every scalar of the library lives in this one type: real and complex
/// scalars are quaternions with vanishing tail coefficients, and the
/// quaternionic conjugation restricts to complex conjugation on C and to the
/// identity on R. The ring a scalar is meant to belong to is carried by the
/// enclosing Matrix / Form / Subspace.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : c_{std::move(re), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a, Rational b, Rational c = 0, Rational d = 0)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Scalar i() { return {0, 1, 0, 0}; }
  static Scalar j() { return {0, 0, 1, 0}; }
  static Scalar k() { return {0, 0, 0, 1}; }

  const Rational& operator[](int idx) const { return c_[idx]; }
  Rational& operator[](int idx) { return c_[idx]; }
  const Rational& re() const { return c_[0]; }

  bool is_zero() const { return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_real() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_complex() const { return sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_one() const { return is_real() && c_[0] == 1; }
  bool in_ring(Ring r) const;
  /// Smallest of R, C, H containing this scalar.
  Ring min_ring() const;
  /// Central in the given ring: always for R and C, real part only for H.
  bool is_central(Ring r) const { return r != Ring::H || is_real(); }

  Scalar conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  Rational norm() const;  // x · conj(x), a nonnegative rational
  Scalar inverse() const;  // throws Error(Singular) on zero

  Scalar operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::array<Rational, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace symspace
