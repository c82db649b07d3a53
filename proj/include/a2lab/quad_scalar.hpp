#pragma once

#include "a2lab/rational.hpp"

namespace a2lab {

/// Exact element a + b*sqrt(disc) of the real quadratic extension Q(sqrt(disc)).
///
/// One discriminant is fixed per context; mixing two genuinely irrational
/// values with different discriminants is an error, never a field extension.
/// If disc is the square of a rational the value collapses to a pure rational
/// (b == 0, disc == 0), so contexts with square discriminants stay rational
/// end to end. A pure rational (b == 0) combines with any discriminant.
class QuadScalar {
 public:
  QuadScalar() : a_(0), b_(0), disc_(0) {}
  QuadScalar(Rational a) : a_(std::move(a)), b_(0), disc_(0) {}  // NOLINT: implicit
  QuadScalar(long n) : a_(n), b_(0), disc_(0) {}                 // NOLINT: implicit

  static QuadScalar make(Rational a, Rational b, Rational disc);

  const Rational& ratpart() const { return a_; }
  const Rational& surdpart() const { return b_; }
  const Rational& disc() const { return disc_; }
  bool is_rational() const { return ::sgn(b_) == 0; }

  /// Exact sign: -1, 0, +1. Irrational parts are resolved by squaring.
  int sgn() const;

  /// Exact three-way comparison.
  int cmp(const QuadScalar& o) const { return (*this - o).sgn(); }

  QuadScalar operator-() const { return QuadScalar(-a_, -b_, disc_); }
  QuadScalar operator+(const QuadScalar& o) const;
  QuadScalar operator-(const QuadScalar& o) const;
  QuadScalar operator*(const QuadScalar& o) const;

  QuadScalar& operator+=(const QuadScalar& o) { return *this = *this + o; }
  QuadScalar& operator-=(const QuadScalar& o) { return *this = *this - o; }
  QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }

  /// Exact reciprocal (a - b sqrt(D)) / (a^2 - b^2 D). Throws on zero.
  QuadScalar recip() const;

  QuadScalar operator/(const QuadScalar& o) const { return *this * o.recip(); }

  bool operator==(const QuadScalar& o) const { return cmp(o) == 0; }
  bool operator!=(const QuadScalar& o) const { return cmp(o) != 0; }
  bool operator<(const QuadScalar& o) const { return cmp(o) < 0; }
  bool operator<=(const QuadScalar& o) const { return cmp(o) <= 0; }
  bool operator>(const QuadScalar& o) const { return cmp(o) > 0; }
  bool operator>=(const QuadScalar& o) const { return cmp(o) >= 0; }

  QuadScalar abs() const { return sgn() < 0 ? -*this : *this; }

  /// Requires a rational value; throws otherwise.
  const Rational& as_rational() const;

  double to_double() const;  // round-to-nearest approximation (display only)

  std::string to_string() const;

 private:
  QuadScalar(Rational a, Rational b, Rational disc)
      : a_(std::move(a)), b_(std::move(b)), disc_(std::move(disc)) {}

  // Returns the discriminant shared by x and y, throwing on a true mismatch.
  static const Rational& common_disc(const QuadScalar& x, const QuadScalar& y);

  Rational a_, b_, disc_;
};

QuadScalar operator*(const Rational& c, const QuadScalar& x);

}  // namespace a2lab
