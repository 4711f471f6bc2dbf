#include "ssp/scalar.hpp"

#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace ssp {

Rational rational_from(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_squarefree(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

Scalar::Scalar(Rational rational_part, Rational radical_part, long radicand)
    : rat_(std::move(rational_part)), rad_(std::move(radical_part)), radicand_(radicand) {
  if (rad_ != 0) {
    if (radicand_ < 2 || !is_squarefree(radicand_))
      throw std::domain_error("radicand must be a squarefree integer >= 2");
  }
  normalize();
}

void Scalar::normalize() {
  if (rad_ == 0) radicand_ = 0;
}

namespace {

// Common radicand of two operands; 0 means both are plain rationals.
long join_radicands(const Scalar& a, const Scalar& b) {
  if (a.radicand() == 0) return b.radicand();
  if (b.radicand() == 0) return a.radicand();
  if (a.radicand() != b.radicand())
    throw std::domain_error("mismatched radicands: sqrt(" + std::to_string(a.radicand()) +
                            ") vs sqrt(" + std::to_string(b.radicand()) + ")");
  return a.radicand();
}

}  // namespace

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.rat_ = -r.rat_;
  r.rad_ = -r.rad_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  radicand_ = join_radicands(*this, o);
  rat_ += o.rat_;
  rad_ += o.rad_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  radicand_ = join_radicands(*this, o);
  rat_ -= o.rat_;
  rad_ -= o.rad_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  long d = join_radicands(*this, o);
  // (a + b sqrt d)(a' + b' sqrt d) = (aa' + bb'd) + (ab' + a'b) sqrt d
  Rational a = rat_, b = rad_;
  rat_ = a * o.rat_ + b * o.rad_ * d;
  rad_ = a * o.rad_ + o.rat_ * b;
  radicand_ = d;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (radicand_ == 0) return Scalar(Rational(1) / rat_);
  // 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d); the norm cannot vanish
  // for a nonzero element since sqrt(d) is irrational.
  Rational norm = rat_ * rat_ - rad_ * rad_ * radicand_;
  return Scalar(rat_ / norm, -rad_ / norm, radicand_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

double Scalar::to_double() const {
  double v = rat_.get_d();
  if (radicand_ != 0) v += rad_.get_d() * std::sqrt(static_cast<double>(radicand_));
  return v;
}

namespace {

std::string render_rational(const Rational& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

}  // namespace

std::string render_scalar(const Scalar& s) {
  if (s.is_rational()) return render_rational(s.rational_part());
  std::string out = render_rational(s.rational_part());
  const Rational& b = s.radical_part();
  if (b >= 0) {
    out += "+" + render_rational(b);
  } else {
    out += "-" + render_rational(-b);
  }
  out += "*sqrt(" + std::to_string(s.radicand()) + ")";
  return out;
}

std::string Scalar::str() const { return render_scalar(*this); }

Scalar parse_scalar(const std::string& text) {
  static const std::regex kRational(R"(^\s*(-?\d+)(?:/(\d+))?\s*$)");
  static const std::regex kQuad(
      R"(^\s*(-?\d+)(?:/(\d+))?\s*([+-])\s*(\d+)(?:/(\d+))?\s*\*\s*sqrt\((\d+)\)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, kRational)) {
    Rational num(m[1].str());
    if (m[2].matched) {
      Rational q(m[1].str() + "/" + m[2].str());
      q.canonicalize();
      return Scalar(q);
    }
    return Scalar(num);
  }
  if (std::regex_match(text, m, kQuad)) {
    Rational a(m[2].matched ? m[1].str() + "/" + m[2].str() : m[1].str());
    a.canonicalize();
    Rational b(m[5].matched ? m[4].str() + "/" + m[5].str() : m[4].str());
    b.canonicalize();
    if (m[3].str() == "-") b = -b;
    long d = std::stol(m[6].str());
    return Scalar(a, b, d);
  }
  throw std::invalid_argument("cannot parse scalar: '" + text + "'");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << render_scalar(s); }

}  // namespace ssp
