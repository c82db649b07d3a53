#pragma once

#include <vector>

#include "a2lab/quad_scalar.hpp"
#include "a2lab/rational.hpp"

namespace a2lab {

struct Piece {
  Rational lo, hi;
  QuadScalar value;
};

/// Finitely many constant pieces with exact rational breakpoints on a
/// half-open interval [lo, hi). The value outside the domain is zero.
/// The segmentation is preserved as given (adjacent pieces may carry equal
/// values); merged() returns the coalesced view.
class PiecewiseFn {
 public:
  PiecewiseFn(Rational lo, Rational hi, QuadScalar v);
  static PiecewiseFn from_pieces(std::vector<Piece> pieces);

  const Rational& domain_lo() const { return lo_; }
  const Rational& domain_hi() const { return hi_; }
  Rational length() const { return hi_ - lo_; }

  size_t piece_count() const { return vals_.size(); }
  const Rational& piece_lo(size_t i) const { return i == 0 ? lo_ : bps_[i - 1]; }
  const Rational& piece_hi(size_t i) const {
    return i == bps_.size() ? hi_ : bps_[i];
  }
  const QuadScalar& value(size_t i) const { return vals_[i]; }
  Piece piece(size_t i) const { return {piece_lo(i), piece_hi(i), vals_[i]}; }

  const std::vector<Rational>& interior_breakpoints() const { return bps_; }
  /// Domain endpoints plus interior breakpoints; size piece_count()+1.
  std::vector<Rational> grid() const;

  /// Index of the piece containing x; requires lo <= x < hi.
  size_t find_piece(const Rational& x) const;
  const QuadScalar& eval(const Rational& x) const { return vals_[find_piece(x)]; }

  /// Exact integral over [a, b); requires lo <= a <= b <= hi.
  QuadScalar integrate(const Rational& a, const Rational& b) const;
  QuadScalar total_integral() const;

  bool all_positive() const;

  PiecewiseFn reciprocal() const;  // throws on a zero piece
  PiecewiseFn scaled(const QuadScalar& c) const;
  PiecewiseFn squared() const;
  /// Pointwise product on the common refinement; domains must coincide.
  PiecewiseFn multiply(const PiecewiseFn& g) const;
  /// Pointwise sum on the common refinement; domains must coincide.
  PiecewiseFn add(const PiecewiseFn& g) const;

  PiecewiseFn restrict_to(const Rational& a, const Rational& b) const;
  /// Affine reparametrization of the whole domain onto [target_lo, target_hi).
  PiecewiseFn affine_to(const Rational& target_lo, const Rational& target_hi) const;
  PiecewiseFn shifted(const Rational& t) const;

  /// Canonical view with adjacent equal values coalesced.
  PiecewiseFn merged() const;

  bool operator==(const PiecewiseFn& o) const;

 private:
  PiecewiseFn() = default;
  void validate() const;
  template <class Op>
  PiecewiseFn combine(const PiecewiseFn& g, Op op) const;

  Rational lo_, hi_;
  std::vector<Rational> bps_;     // interior breakpoints, strictly increasing
  std::vector<QuadScalar> vals_;  // one per piece: bps_.size() + 1 entries
};

/// 1-periodic extension of a base function on [0, 1).
class PeriodicFn {
 public:
  explicit PeriodicFn(PiecewiseFn base);

  const PiecewiseFn& base() const { return base_; }

  const QuadScalar& eval(const Rational& x) const;
  /// Exact integral over [a, b) for arbitrary rational a <= b.
  QuadScalar integrate(const Rational& a, const Rational& b) const;

  /// The base pieces replicated over [first_period, last_period+1) with
  /// integer-shifted breakpoints; used to build evaluation windows.
  PiecewiseFn window(long first_period, long last_period) const;

 private:
  PiecewiseFn base_;
  QuadScalar period_integral_;
};

}  // namespace a2lab
