#include "a2lab/float_interval.hpp"

#include <cmath>
#include <sstream>

namespace a2lab {

int digits_to_bits(int decimal_digits) {
  if (decimal_digits < 2) decimal_digits = 2;
  return static_cast<int>(std::ceil(decimal_digits * 3.3219280948873626)) + 16;
}

FloatInterval::FloatInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

FloatInterval::FloatInterval(const FloatInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

FloatInterval::FloatInterval(FloatInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

FloatInterval& FloatInterval::operator=(const FloatInterval& o) {
  if (this != &o) {
    if (prec_ != o.prec_) {
      mpfr_set_prec(lo_, o.prec_);
      mpfr_set_prec(hi_, o.prec_);
      prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

FloatInterval& FloatInterval::operator=(FloatInterval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
  }
  return *this;
}

FloatInterval::~FloatInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

FloatInterval FloatInterval::exact(long v, mpfr_prec_t prec) {
  FloatInterval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::of_rational(const Rational& q, mpfr_prec_t prec) {
  FloatInterval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::sqrt_of_rational(const Rational& q, mpfr_prec_t prec) {
  if (sgn(q) < 0) throw std::domain_error("sqrt of negative rational");
  FloatInterval r = of_rational(q, prec);
  mpfr_sqrt(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::log_of_rational(const Rational& q, mpfr_prec_t prec) {
  if (sgn(q) <= 0) throw std::domain_error("log of non-positive rational");
  FloatInterval r = of_rational(q, prec);
  mpfr_log(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::of_quad(const QuadScalar& x, mpfr_prec_t prec) {
  FloatInterval r = of_rational(x.ratpart(), prec);
  if (!x.is_rational()) {
    FloatInterval s = sqrt_of_rational(x.disc(), prec);
    r = r + of_rational(x.surdpart(), prec) * s;
  }
  return r;
}

FloatInterval FloatInterval::operator+(const FloatInterval& o) const {
  FloatInterval r(prec_);
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::operator-(const FloatInterval& o) const {
  FloatInterval r(prec_);
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::operator*(const FloatInterval& o) const {
  // All four corner products in both directions; correct for every sign case.
  FloatInterval r(prec_);
  mpfr_t t;
  mpfr_init2(t, prec_);
  bool first = true;
  const mpfr_srcptr xs[2] = {lo_, hi_};
  const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

FloatInterval FloatInterval::operator-() const {
  FloatInterval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::abs() const {
  FloatInterval r(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  // straddles zero
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  if (mpfr_cmp(r.hi_, hi_) < 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("sqrt of possibly-negative interval");
  FloatInterval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

void FloatInterval::scale_by_pow2(long e) {
  mpfr_mul_2si(lo_, lo_, e, MPFR_RNDD);
  mpfr_mul_2si(hi_, hi_, e, MPFR_RNDU);
}

bool FloatInterval::certainly_le(const Rational& q) const {
  return mpfr_cmp_q(hi_, const_cast<mpq_ptr>(q.get_mpq_t())) <= 0;
}

bool FloatInterval::certainly_ge(const Rational& q) const {
  return mpfr_cmp_q(lo_, const_cast<mpq_ptr>(q.get_mpq_t())) >= 0;
}

bool FloatInterval::certainly_gt(const Rational& q) const {
  return mpfr_cmp_q(lo_, const_cast<mpq_ptr>(q.get_mpq_t())) > 0;
}

bool FloatInterval::certainly_lt(const FloatInterval& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

bool FloatInterval::certainly_le_iv(const FloatInterval& o) const {
  return mpfr_cmp(hi_, o.lo_) <= 0;
}

bool FloatInterval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool FloatInterval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool FloatInterval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

double FloatInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double FloatInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double FloatInterval::mid_double() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double FloatInterval::width_double() const {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  double w = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return w;
}

std::string FloatInterval::to_string(int display_digits) const {
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dRNg", display_digits);
  char* s = nullptr;
  mpfr_asprintf(&s, fmt, lo_);
  std::string out(s);
  mpfr_free_str(s);
  if (mpfr_cmp(lo_, hi_) != 0) {
    mpfr_asprintf(&s, fmt, hi_);
    out += " .. ";
    out += s;
    mpfr_free_str(s);
  }
  return out;
}

}  // namespace a2lab
