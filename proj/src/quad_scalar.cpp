#include "a2lab/quad_scalar.hpp"

#include <cmath>

namespace a2lab {

QuadScalar QuadScalar::make(Rational a, Rational b, Rational disc) {
  if (::sgn(disc) < 0) throw std::invalid_argument("negative discriminant");
  if (::sgn(b) == 0 || ::sgn(disc) == 0)
    return QuadScalar(std::move(a), Rational(0), Rational(0));
  if (auto r = exact_sqrt(disc))
    return QuadScalar(a + b * *r, Rational(0), Rational(0));
  return QuadScalar(std::move(a), std::move(b), std::move(disc));
}

const Rational& QuadScalar::common_disc(const QuadScalar& x, const QuadScalar& y) {
  if (x.is_rational()) return y.disc_;
  if (y.is_rational()) return x.disc_;
  if (x.disc_ != y.disc_)
    throw std::invalid_argument("mismatched discriminants: " +
                                rat_to_string(x.disc_) + " vs " +
                                rat_to_string(y.disc_));
  return x.disc_;
}

int QuadScalar::sgn() const {
  const int sa = ::sgn(a_);
  const int sb = ::sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(D) have opposite signs: compare a^2 with b^2 D.
  const int c = ::cmp(Rational(a_ * a_), Rational(b_ * b_ * disc_));
  if (c == 0) return 0;
  return sa > 0 ? c : -c;
}

QuadScalar QuadScalar::operator+(const QuadScalar& o) const {
  const Rational& d = common_disc(*this, o);
  return make(a_ + o.a_, b_ + o.b_, d);
}

QuadScalar QuadScalar::operator-(const QuadScalar& o) const {
  const Rational& d = common_disc(*this, o);
  return make(a_ - o.a_, b_ - o.b_, d);
}

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
  const Rational& d = common_disc(*this, o);
  return make(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d);
}

QuadScalar QuadScalar::recip() const {
  if (::sgn(b_) == 0) {
    if (::sgn(a_) == 0) throw std::domain_error("reciprocal of exact zero");
    return QuadScalar(1 / a_, Rational(0), Rational(0));
  }
  const Rational norm = a_ * a_ - b_ * b_ * disc_;
  if (::sgn(norm) == 0) throw std::domain_error("reciprocal of exact zero");
  return QuadScalar(a_ / norm, -b_ / norm, disc_);
}

const Rational& QuadScalar::as_rational() const {
  if (!is_rational())
    throw std::domain_error("value has an irrational part: " + to_string());
  return a_;
}

double QuadScalar::to_double() const {
  double v = a_.get_d();
  if (::sgn(b_) != 0) v += b_.get_d() * std::sqrt(disc_.get_d());
  return v;
}

std::string QuadScalar::to_string() const {
  if (is_rational()) return rat_to_string(a_);
  return rat_to_string(a_) + " + " + rat_to_string(b_) + "*sqrt(" +
         rat_to_string(disc_) + ")";
}

QuadScalar operator*(const Rational& c, const QuadScalar& x) {
  return QuadScalar(c) * x;
}

}  // namespace a2lab
