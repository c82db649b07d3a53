#include "a2lab/hilbert.hpp"

#include <map>

namespace a2lab {

std::vector<LogTerm> hilbert_terms(const PiecewiseFn& f) {
  std::vector<LogTerm> terms;
  terms.reserve(f.piece_count());
  for (size_t i = 0; i < f.piece_count(); ++i)
    terms.push_back({f.value(i), f.piece_lo(i), f.piece_hi(i)});
  return terms;
}

HilbertEvaluator::HilbertEvaluator(std::vector<LogTerm> terms, mpfr_prec_t prec)
    : terms_(std::move(terms)), prec_(prec) {
  std::map<Rational, QuadScalar> gamma;
  for (const LogTerm& t : terms_) {
    gamma[t.a] += t.coeff;
    gamma[t.b] -= t.coeff;
  }
  for (auto& [pos, g] : gamma) {
    if (g.sgn() == 0) continue;
    pos_.push_back(pos);
    gamma_.push_back(FloatInterval::of_quad(g, prec_));
  }
}

FloatInterval HilbertEvaluator::at(const Rational& x) const {
  FloatInterval sum(prec_);
  for (size_t i = 0; i < pos_.size(); ++i) {
    Rational d = x - pos_[i];
    if (sgn(d) == 0)
      throw std::domain_error("transform undefined on a breakpoint");
    if (sgn(d) < 0) d = -d;
    sum += gamma_[i] * FloatInterval::log_of_rational(d, prec_);
  }
  return sum;
}

}  // namespace a2lab
