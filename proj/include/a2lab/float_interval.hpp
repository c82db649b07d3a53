#pragma once

#include <mpfr.h>

#include <string>

#include "a2lab/quad_scalar.hpp"
#include "a2lab/rational.hpp"

namespace a2lab {

int digits_to_bits(int decimal_digits);

/// Closed interval [lo, hi] of configurable-precision binary floats that is
/// guaranteed to contain the represented real number. Every operation rounds
/// outward, so enclosure is preserved through arbitrary expression trees.
/// Used wherever a logarithm forces us off the exact quadratic field.
class FloatInterval {
 public:
  explicit FloatInterval(mpfr_prec_t prec = 64);
  FloatInterval(const FloatInterval& o);
  FloatInterval(FloatInterval&& o) noexcept;
  FloatInterval& operator=(const FloatInterval& o);
  FloatInterval& operator=(FloatInterval&& o) noexcept;
  ~FloatInterval();

  mpfr_prec_t prec() const { return prec_; }

  static FloatInterval exact(long v, mpfr_prec_t prec);
  static FloatInterval of_rational(const Rational& q, mpfr_prec_t prec);
  /// sqrt(q), q >= 0 exact rational argument.
  static FloatInterval sqrt_of_rational(const Rational& q, mpfr_prec_t prec);
  /// log(q), q > 0 exact rational argument.
  static FloatInterval log_of_rational(const Rational& q, mpfr_prec_t prec);
  static FloatInterval of_quad(const QuadScalar& x, mpfr_prec_t prec);

  FloatInterval operator+(const FloatInterval& o) const;
  FloatInterval operator-(const FloatInterval& o) const;
  FloatInterval operator*(const FloatInterval& o) const;
  FloatInterval operator-() const;
  FloatInterval& operator+=(const FloatInterval& o) { return *this = *this + o; }
  FloatInterval& operator-=(const FloatInterval& o) { return *this = *this - o; }

  FloatInterval abs() const;
  FloatInterval sqrt() const;  // requires lo >= 0

  void scale_by_pow2(long e);  // exact

  /// Certified comparisons: true only when the whole interval qualifies.
  bool certainly_le(const Rational& q) const;
  bool certainly_ge(const Rational& q) const;
  bool certainly_gt(const Rational& q) const;  // lo > q
  bool certainly_lt(const FloatInterval& o) const;  // hi < o.lo
  bool certainly_le_iv(const FloatInterval& o) const;  // hi <= o.lo
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool contains_zero() const;

  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up
  double mid_double() const;
  /// Upper bound on hi - lo (the certified rounding slack).
  double width_double() const;

  std::string to_string(int display_digits = 20) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

}  // namespace a2lab
