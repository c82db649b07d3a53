#pragma once

#include "a2lab/float_interval.hpp"
#include "a2lab/piecewise.hpp"

namespace a2lab {

/// One closed-form summand coeff * (ln|x - a| - ln|x - b|) of the Hilbert
/// transform of a step function; the term list mirrors the piece list.
struct LogTerm {
  QuadScalar coeff;
  Rational a, b;
};

std::vector<LogTerm> hilbert_terms(const PiecewiseFn& f);

/// Evaluates sums of log terms with certified enclosures. Coefficient
/// enclosures are cached; log arguments are exact rationals, so the only
/// rounding is the directed rounding of the log and the accumulation.
class HilbertEvaluator {
 public:
  HilbertEvaluator(std::vector<LogTerm> terms, mpfr_prec_t prec);

  /// Certified enclosure of the transform at x. Throws std::domain_error if
  /// x coincides with a term endpoint (the principal value is undefined on
  /// breakpoints).
  FloatInterval at(const Rational& x) const;

  const std::vector<LogTerm>& terms() const { return terms_; }
  bool empty() const { return gamma_.empty(); }
  mpfr_prec_t prec() const { return prec_; }

 private:
  std::vector<LogTerm> terms_;
  // Collapsed representation: sum over endpoints of gamma_e * ln|x - e|.
  std::vector<Rational> pos_;
  std::vector<FloatInterval> gamma_;
  mpfr_prec_t prec_;
};

}  // namespace a2lab
