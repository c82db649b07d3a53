#include "a2lab/diagnostics.hpp"

#include <set>

#include "a2lab/lattice.hpp"
#include "a2lab/maximal.hpp"

namespace a2lab {

Diagnostics a1_a2_diagnostics(const ConstructedWeight& cw, long window) {
  Diagnostics d;
  const PeriodicMaximal pm = maximal_periodic(cw.periodic, window);
  for (size_t i = 0; i < cw.w.piece_count(); ++i) {
    const QuadScalar inv = cw.w.value(i).recip();
    const QuadScalar lo = pm.lower[i] * inv;
    const QuadScalar hi = pm.upper[i] * inv;
    if (lo.cmp(d.a1.lo) > 0) d.a1.lo = lo;
    if (hi.cmp(d.a1.hi) > 0) d.a1.hi = hi;
  }

  const PeriodicFn sigma_p(cw.sigma);
  Rational min_gap = 1;
  for (size_t i = 0; i < cw.w.piece_count(); ++i)
    min_gap = std::min(min_gap, Rational(cw.w.piece_hi(i) - cw.w.piece_lo(i)));
  int floor_m = 1;
  {
    Rational len = rat(2, 3);
    while (len >= min_gap) {
      ++floor_m;
      len /= 3;
    }
  }
  d.a2.scale_floor = floor_m;
  d.a2.coarse_value = QuadScalar(cw.params.p);
  d.a2.lattice_max = d.a2.coarse_value;  // attained by every full period

  const std::vector<Rational> grid = cw.w.grid();
  auto ratio_at = [&](const Rational& lo, const Rational& hi) {
    const QuadScalar wj = cw.periodic.integrate(lo, hi);
    const QuadScalar sj = sigma_p.integrate(lo, hi);
    const Rational len = hi - lo;
    return wj * sj * Rational(1 / (len * len));
  };
  for (int m = 1; m <= floor_m; ++m) {
    const Rational unit = pow3(-m);
    long period = 1;
    for (int i = 0; i < m; ++i) period *= 3;
    std::set<long> cand;
    if (period <= static_cast<long>(4 * grid.size())) {
      for (long n = 0; n < period; ++n) cand.insert(n);
    } else {
      for (const Rational& b : grid) {
        const long g = static_cast<long>(floor_rat(b / unit).get_si());
        for (long n : {g - 2, g - 1, g})
          cand.insert(((n % period) + period) % period);
      }
    }
    for (long n : cand) {
      // triadic interval and the pair starting at the same position
      const QuadScalar t = ratio_at(n * unit, (n + 1) * unit);
      if (t.cmp(d.a2.lattice_max) > 0) d.a2.lattice_max = t;
      const QuadScalar pr = ratio_at(n * unit, (n + 2) * unit);
      if (pr.cmp(d.a2.lattice_max) > 0) d.a2.lattice_max = pr;
    }
  }

  // Below the floor a window meets one jump: two values v, u mix at worst as
  // (v+u)^2 / 4vu.
  const size_t n = cw.w.piece_count();
  QuadScalar cap(1);
  for (size_t i = 0; i < n; ++i) {
    const QuadScalar& a = cw.w.value(i);
    const QuadScalar& b = cw.w.value((i + 1) % n);
    const QuadScalar s = a + b;
    const QuadScalar v = s * s * (Rational(4) * a * b).recip();
    if (v.cmp(cap) > 0) cap = v;
  }
  d.a2.fine_cap = cap;
  return d;
}

}  // namespace a2lab
