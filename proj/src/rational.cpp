#include "a2lab/rational.hpp"

namespace a2lab {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational string");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational string: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow3(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3u, static_cast<unsigned long>(e < 0 ? -e : e));
  Rational q(p);
  if (e < 0) q = 1 / q;
  return q;
}

Rational pow2(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2u, static_cast<unsigned long>(e < 0 ? -e : e));
  Rational q(p);
  if (e < 0) q = 1 / q;
  return q;
}

BigInt floor_rat(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) throw std::invalid_argument("exact_sqrt of negative value");
  if (sgn(q) == 0) return Rational(0);
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace a2lab
