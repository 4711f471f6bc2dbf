#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace ssp {

// Arbitrary-precision rational, always canonical (gcd 1, positive denominator).
using Rational = mpq_class;

Rational rational_from(long num, long den = 1);

/// Exact scalar: either a rational or an element a + b*sqrt(d) of Q(sqrt(d)),
/// d a squarefree integer >= 2. A value with zero radical part normalizes back
/// to a plain rational, so equality is structural.
class Scalar {
 public:
  Scalar() : rat_(0), rad_(0), radicand_(0) {}
  Scalar(int v) : rat_(v), rad_(0), radicand_(0) {}            // NOLINT(google-explicit-constructor)
  Scalar(long v) : rat_(v), rad_(0), radicand_(0) {}           // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v) : rat_(v), rad_(0), radicand_(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational rational_part, Rational radical_part, long radicand);

  static Scalar sqrt_of(long radicand) { return Scalar(0, 1, radicand); }

  const Rational& rational_part() const { return rat_; }
  const Rational& radical_part() const { return rad_; }
  long radicand() const { return radicand_; }

  bool is_zero() const { return rat_ == 0 && rad_ == 0; }
  bool is_rational() const { return radicand_ == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.rad_ == b.rad_ && a.radicand_ == b.radicand_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;

  /// Approximate value, for the verifier's non-certifying floating mode only.
  double to_double() const;

  std::string str() const;

 private:
  void normalize();

  Rational rat_;
  Rational rad_;
  long radicand_;  // 0 for plain rationals
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_squarefree(long d);

// "p", "p/q", or "p/q+r/s*sqrt(d)" (radical sign may be '-'); see render.
std::string render_scalar(const Scalar& s);
Scalar parse_scalar(const std::string& text);

}  // namespace ssp
