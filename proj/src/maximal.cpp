#include "a2lab/maximal.hpp"

#include <algorithm>

namespace a2lab {

namespace {

// Prefix-sum graph of a step function: points (x_i, S_i) with x strictly
// increasing. Averages over [x_j, x_q] are slopes between graph points, so
// one-sided maximal averages become max-slope queries against a convex hull.
struct SlopeSweep {
  const std::vector<Rational>& x;
  const std::vector<QuadScalar>& y;

  // cross(a, b, c) > 0 iff the turn a->b->c is counterclockwise.
  int cross_sign(size_t a, size_t b, size_t c) const {
    const QuadScalar lhs = (x[b] - x[a]) * (y[c] - y[a]);
    const QuadScalar rhs = (x[c] - x[a]) * (y[b] - y[a]);
    return lhs.cmp(rhs);
  }

  // slope(a,b) vs slope(c,d), all indices with x[a]<x[b], x[c]<x[d].
  int slope_cmp(size_t a, size_t b, size_t c, size_t d) const {
    const QuadScalar lhs = (y[b] - y[a]) * Rational(x[d] - x[c]);
    const QuadScalar rhs = (y[d] - y[c]) * Rational(x[b] - x[a]);
    return lhs.cmp(rhs);
  }

  // best[q] = max over j < q of slope(j, q); has[0] stays false.
  // Sweeps a lower convex hull; the slope from a point strictly right of the
  // hull to its vertices is strictly unimodal, so a binary search finds the
  // tangent vertex.
  void max_back_slopes(std::vector<QuadScalar>& best, std::vector<char>& has) const {
    const size_t n = x.size();
    best.assign(n, QuadScalar());
    has.assign(n, 0);
    std::vector<size_t> hull;
    hull.reserve(n);
    for (size_t q = 0; q < n; ++q) {
      if (!hull.empty()) {
        size_t lo = 0, hi = hull.size() - 1;
        while (lo < hi) {
          const size_t mid = (lo + hi) / 2;
          if (slope_cmp(hull[mid], q, hull[mid + 1], q) < 0)
            lo = mid + 1;
          else
            hi = mid;
        }
        const size_t j = hull[lo];
        best[q] = (y[q] - y[j]) * Rational(1 / (x[q] - x[j]));
        has[q] = 1;
      }
      while (hull.size() >= 2 &&
             cross_sign(hull[hull.size() - 2], hull.back(), q) <= 0)
        hull.pop_back();
      hull.push_back(q);
    }
  }
};

void check_nonnegative(const PiecewiseFn& f) {
  for (size_t i = 0; i < f.piece_count(); ++i)
    if (f.value(i).sgn() < 0)
      throw std::invalid_argument("maximal function requires f >= 0");
}

}  // namespace

MaximalEnvelope maximal_compact(const PiecewiseFn& f) {
  check_nonnegative(f);
  const size_t n = f.piece_count();
  std::vector<Rational> gx = f.grid();
  std::vector<QuadScalar> gy(n + 1);
  for (size_t i = 0; i < n; ++i)
    gy[i + 1] = gy[i] + (f.piece_hi(i) - f.piece_lo(i)) * f.value(i);

  std::vector<QuadScalar> bestl;
  std::vector<char> hasl;
  SlopeSweep{gx, gy}.max_back_slopes(bestl, hasl);

  // Right-side version: reflect through the origin and reverse; slopes are
  // preserved, so the backward sweep of the reflection is the forward one.
  std::vector<Rational> rx(n + 1);
  std::vector<QuadScalar> ry(n + 1);
  for (size_t i = 0; i <= n; ++i) {
    rx[i] = -gx[n - i];
    ry[i] = -gy[n - i];
  }
  std::vector<QuadScalar> bestr_rev;
  std::vector<char> hasr_rev;
  SlopeSweep{rx, ry}.max_back_slopes(bestr_rev, hasr_rev);

  MaximalEnvelope env;
  env.per_piece_sup.resize(n);
  for (size_t i = 0; i < n; ++i) {
    QuadScalar m = f.value(i);
    auto fold = [&m](const QuadScalar& v) {
      if (v.cmp(m) > 0) m = v;
    };
    if (hasl[i]) fold(bestl[i]);
    if (hasl[i + 1]) fold(bestl[i + 1]);
    if (hasr_rev[n - i]) fold(bestr_rev[n - i]);
    if (hasr_rev[n - i - 1]) fold(bestr_rev[n - i - 1]);
    env.per_piece_sup[i] = std::move(m);
  }
  return env;
}

QuadScalar maximal_at(const PiecewiseFn& f, const Rational& x) {
  check_nonnegative(f);
  if (x < f.domain_lo() || x >= f.domain_hi())
    throw std::out_of_range("maximal_at point outside domain");
  const std::vector<Rational> g = f.grid();
  QuadScalar best = f.eval(x);
  // One-sided averages anchored at x; sup over two-sided intervals equals the
  // larger of the two one-sided suprema.
  QuadScalar cum;  // mass between x and the candidate endpoint
  for (size_t i = f.find_piece(x) + 1; i < g.size(); ++i) {
    cum = f.integrate(x, g[i]);
    const QuadScalar avg = cum * Rational(1 / (g[i] - x));
    if (avg.cmp(best) > 0) best = avg;
  }
  for (size_t i = f.find_piece(x) + 1; i-- > 0;) {
    if (g[i] >= x) continue;
    cum = f.integrate(g[i], x);
    const QuadScalar avg = cum * Rational(1 / (x - g[i]));
    if (avg.cmp(best) > 0) best = avg;
  }
  return best;
}

PeriodicMaximal maximal_periodic(const PeriodicFn& f, long window_periods) {
  if (window_periods < 2)
    throw std::invalid_argument("window must span at least 2 periods");
  check_nonnegative(f.base());
  const long w = window_periods;
  const PiecewiseFn win = f.window(1 - w, w - 1);  // domain [1-w, w)
  const MaximalEnvelope env = maximal_compact(win);

  const size_t per = f.base().piece_count();
  PeriodicMaximal out;
  out.window = w;
  out.cap = rat(w + 1, w - 1) * f.base().total_integral();
  out.lower.resize(per);
  out.upper.resize(per);
  const size_t center = static_cast<size_t>(w - 1) * per;
  for (size_t i = 0; i < per; ++i) {
    out.lower[i] = env.per_piece_sup[center + i];
    out.upper[i] =
        out.cap.cmp(out.lower[i]) > 0 ? out.cap : out.lower[i];
  }
  return out;
}

PiecewiseFn triadic_maximal(const PiecewiseFn& f, const TriadicInterval& root) {
  check_nonnegative(f);
  if (f.domain_lo() < root.lo() || f.domain_hi() > root.hi())
    throw std::invalid_argument("function domain escapes the lattice root");

  // Finest grid scale: all breakpoints must be multiples of 3^scale.
  int scale = root.scale;
  const std::vector<Rational> g = f.grid();
  auto on_grid = [&](int s) {
    const Rational unit = pow3(s);
    for (const Rational& b : g)
      if (Rational(b / unit).get_den() != 1) return false;
    return true;
  };
  while (!on_grid(scale)) {
    --scale;
    if (root.scale - scale > 40)
      throw std::invalid_argument("breakpoints are not on a triadic grid");
  }
  long cells = 1;
  for (int s = scale; s < root.scale; ++s) {
    cells *= 3;
    if (cells > 177147)  // 3^11
      throw std::invalid_argument("triadic grid too fine for dense evaluation");
  }

  const Rational unit = pow3(scale);
  const QuadScalar total = f.total_integral();
  std::vector<Piece> out;
  out.reserve(static_cast<size_t>(cells));
  for (long c = 0; c < cells; ++c) {
    const Rational clo = root.lo() + c * unit;
    const Rational chi = clo + unit;
    QuadScalar m;  // max over the cell and its triadic ancestors
    Rational tlo = clo, thi = chi, tlen = unit;
    while (true) {
      const Rational alo = std::max(tlo, f.domain_lo());
      const Rational ahi = std::min(thi, f.domain_hi());
      if (alo < ahi) {
        const QuadScalar avg = f.integrate(alo, ahi) * Rational(1 / tlen);
        if (avg.cmp(m) > 0) m = avg;
      }
      if (tlen == root.length()) break;
      // parent triadic interval
      const Rational rel = (tlo - root.lo()) / (3 * tlen);
      const Rational plo = root.lo() + Rational(floor_rat(rel)) * (3 * tlen);
      tlo = plo;
      tlen *= 3;
      thi = tlo + tlen;
    }
    out.push_back({clo, chi, std::move(m)});
  }
  return PiecewiseFn::from_pieces(std::move(out));
}

QuadScalar pair_maximal_at(const PiecewiseFn& f, const Rational& x) {
  check_nonnegative(f);
  if (x < f.domain_lo() || x >= f.domain_hi())
    throw std::out_of_range("evaluation point outside domain");
  for (const Rational& b : f.grid())
    if (b == x) throw std::invalid_argument("point sits on a breakpoint");

  // Below the starting scale every containing pair stays inside the piece of
  // x, where the average is exactly f(x).
  QuadScalar best = f.eval(x);
  Rational gap = std::min(x - f.piece_lo(f.find_piece(x)),
                          f.piece_hi(f.find_piece(x)) - x);
  int j = 0;
  Rational unit = 1;
  while (unit * 2 >= gap) {
    --j;
    unit /= 3;
  }
  const Rational hull = f.domain_hi() - f.domain_lo();
  for (;; ++j, unit *= 3) {
    bool both_cover = true;
    const BigInt base = floor_rat(x / unit);
    for (int d = -1; d <= 0; ++d) {
      const Rational lo = Rational(base + d) * unit;
      const Rational hi = lo + 2 * unit;
      if (!(lo <= f.domain_lo() && hi >= f.domain_hi())) both_cover = false;
      const Rational alo = std::max(lo, f.domain_lo());
      const Rational ahi = std::min(hi, f.domain_hi());
      if (alo >= ahi) continue;
      const QuadScalar avg = f.integrate(alo, ahi) * Rational(1 / (2 * unit));
      if (avg.cmp(best) > 0) best = avg;
    }
    if (both_cover || unit > 4 * hull) break;
  }
  return best;
}

}  // namespace a2lab
