#include "a2lab/piecewise.hpp"

#include <algorithm>

namespace a2lab {

PiecewiseFn::PiecewiseFn(Rational lo, Rational hi, QuadScalar v)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ >= hi_) throw std::invalid_argument("empty domain");
  vals_.push_back(std::move(v));
}

PiecewiseFn PiecewiseFn::from_pieces(std::vector<Piece> pieces) {
  if (pieces.empty()) throw std::invalid_argument("no pieces");
  PiecewiseFn f;
  f.lo_ = pieces.front().lo;
  f.hi_ = pieces.back().hi;
  f.vals_.reserve(pieces.size());
  f.bps_.reserve(pieces.size() - 1);
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].lo >= pieces[i].hi)
      throw std::invalid_argument("degenerate piece");
    if (i > 0 && pieces[i].lo != pieces[i - 1].hi)
      throw std::invalid_argument("pieces are not contiguous");
    if (i > 0) f.bps_.push_back(pieces[i].lo);
    f.vals_.push_back(std::move(pieces[i].value));
  }
  return f;
}

void PiecewiseFn::validate() const {
  if (lo_ >= hi_) throw std::invalid_argument("empty domain");
  for (size_t i = 0; i < bps_.size(); ++i) {
    if (bps_[i] <= (i == 0 ? lo_ : bps_[i - 1]) || bps_[i] >= hi_)
      throw std::invalid_argument("breakpoints not strictly increasing inside domain");
  }
  if (vals_.size() != bps_.size() + 1)
    throw std::invalid_argument("value/breakpoint count mismatch");
}

std::vector<Rational> PiecewiseFn::grid() const {
  std::vector<Rational> g;
  g.reserve(bps_.size() + 2);
  g.push_back(lo_);
  g.insert(g.end(), bps_.begin(), bps_.end());
  g.push_back(hi_);
  return g;
}

size_t PiecewiseFn::find_piece(const Rational& x) const {
  if (x < lo_ || x >= hi_)
    throw std::out_of_range("evaluation point outside domain");
  return static_cast<size_t>(
      std::upper_bound(bps_.begin(), bps_.end(), x) - bps_.begin());
}

QuadScalar PiecewiseFn::integrate(const Rational& a, const Rational& b) const {
  if (a < lo_ || b > hi_ || a > b)
    throw std::out_of_range("integration range outside domain");
  QuadScalar total;
  if (a == b) return total;
  size_t i = find_piece(a);
  Rational x = a;
  while (x < b) {
    const Rational& hi = piece_hi(i);
    const Rational& upto = hi < b ? hi : b;
    total += (upto - x) * vals_[i];
    x = upto;
    ++i;
  }
  return total;
}

QuadScalar PiecewiseFn::total_integral() const {
  QuadScalar total;
  for (size_t i = 0; i < vals_.size(); ++i)
    total += (piece_hi(i) - piece_lo(i)) * vals_[i];
  return total;
}

bool PiecewiseFn::all_positive() const {
  for (const auto& v : vals_)
    if (v.sgn() <= 0) return false;
  return true;
}

PiecewiseFn PiecewiseFn::reciprocal() const {
  PiecewiseFn f(*this);
  for (auto& v : f.vals_) v = v.recip();
  return f;
}

PiecewiseFn PiecewiseFn::scaled(const QuadScalar& c) const {
  PiecewiseFn f(*this);
  for (auto& v : f.vals_) v *= c;
  return f;
}

PiecewiseFn PiecewiseFn::squared() const {
  PiecewiseFn f(*this);
  for (auto& v : f.vals_) v *= v;
  return f;
}

template <class Op>
PiecewiseFn PiecewiseFn::combine(const PiecewiseFn& g, Op op) const {
  if (lo_ != g.lo_ || hi_ != g.hi_)
    throw std::invalid_argument("pointwise combination requires equal domains");
  PiecewiseFn r;
  r.lo_ = lo_;
  r.hi_ = hi_;
  size_t i = 0, j = 0;
  while (true) {
    r.vals_.push_back(op(vals_[i], g.vals_[j]));
    const Rational& hi1 = piece_hi(i);
    const Rational& hi2 = g.piece_hi(j);
    const Rational& next = hi1 < hi2 ? hi1 : hi2;
    if (next == hi_) break;
    r.bps_.push_back(next);
    if (hi1 == next) ++i;
    if (hi2 == next) ++j;
  }
  return r;
}

PiecewiseFn PiecewiseFn::multiply(const PiecewiseFn& g) const {
  return combine(g, [](const QuadScalar& a, const QuadScalar& b) { return a * b; });
}

PiecewiseFn PiecewiseFn::add(const PiecewiseFn& g) const {
  return combine(g, [](const QuadScalar& a, const QuadScalar& b) { return a + b; });
}

PiecewiseFn PiecewiseFn::restrict_to(const Rational& a, const Rational& b) const {
  if (a < lo_ || b > hi_ || a >= b)
    throw std::out_of_range("restriction target outside domain or empty");
  PiecewiseFn r;
  r.lo_ = a;
  r.hi_ = b;
  size_t i = find_piece(a);
  for (;; ++i) {
    r.vals_.push_back(vals_[i]);
    const Rational& hi = piece_hi(i);
    if (hi >= b) break;
    r.bps_.push_back(hi);
  }
  return r;
}

PiecewiseFn PiecewiseFn::affine_to(const Rational& target_lo,
                                   const Rational& target_hi) const {
  if (target_lo >= target_hi) throw std::invalid_argument("empty affine target");
  const Rational scale = (target_hi - target_lo) / (hi_ - lo_);
  PiecewiseFn r(*this);
  r.lo_ = target_lo;
  r.hi_ = target_hi;
  for (auto& b : r.bps_) b = target_lo + (b - lo_) * scale;
  return r;
}

PiecewiseFn PiecewiseFn::shifted(const Rational& t) const {
  PiecewiseFn r(*this);
  r.lo_ += t;
  r.hi_ += t;
  for (auto& b : r.bps_) b += t;
  return r;
}

PiecewiseFn PiecewiseFn::merged() const {
  PiecewiseFn r;
  r.lo_ = lo_;
  r.hi_ = hi_;
  for (size_t i = 0; i < vals_.size(); ++i) {
    if (!r.vals_.empty() && r.vals_.back() == vals_[i]) continue;
    if (!r.vals_.empty()) r.bps_.push_back(piece_lo(i));
    r.vals_.push_back(vals_[i]);
  }
  return r;
}

bool PiecewiseFn::operator==(const PiecewiseFn& o) const {
  if (lo_ != o.lo_ || hi_ != o.hi_ || bps_ != o.bps_) return false;
  if (vals_.size() != o.vals_.size()) return false;
  for (size_t i = 0; i < vals_.size(); ++i)
    if (vals_[i] != o.vals_[i]) return false;
  return true;
}

PeriodicFn::PeriodicFn(PiecewiseFn base) : base_(std::move(base)) {
  if (base_.domain_lo() != 0 || base_.domain_hi() != 1)
    throw std::invalid_argument("periodic base must live on [0,1)");
  period_integral_ = base_.total_integral();
}

const QuadScalar& PeriodicFn::eval(const Rational& x) const {
  return base_.eval(x - Rational(floor_rat(x)));
}

QuadScalar PeriodicFn::integrate(const Rational& a, const Rational& b) const {
  if (a > b) throw std::invalid_argument("reversed integration range");
  auto cumulative = [&](const Rational& x) {
    const Rational fl(floor_rat(x));
    return Rational(fl) * period_integral_ + base_.integrate(0, x - fl);
  };
  return cumulative(b) - cumulative(a);
}

PiecewiseFn PeriodicFn::window(long first_period, long last_period) const {
  if (first_period > last_period) throw std::invalid_argument("empty window");
  std::vector<Piece> pieces;
  pieces.reserve(static_cast<size_t>(last_period - first_period + 1) *
                 base_.piece_count());
  for (long p = first_period; p <= last_period; ++p) {
    const Rational t(p);
    for (size_t i = 0; i < base_.piece_count(); ++i)
      pieces.push_back(
          {base_.piece_lo(i) + t, base_.piece_hi(i) + t, base_.value(i)});
  }
  return PiecewiseFn::from_pieces(std::move(pieces));
}

}  // namespace a2lab
