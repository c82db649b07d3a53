#include "a2lab/sawyer.hpp"

#include <algorithm>
#include <random>

#include "a2lab/maximal.hpp"

namespace a2lab {

namespace {

TriadicInterval domain_as_triadic(const PiecewiseFn& f) {
  const Rational len = f.length();
  int scale = 0;
  Rational unit = 1;
  while (unit < len) {
    ++scale;
    unit *= 3;
  }
  while (unit > len) {
    --scale;
    unit /= 3;
    if (scale < -40) break;
  }
  if (unit != len)
    throw std::invalid_argument("domain length is not a power of three");
  const Rational q = f.domain_lo() / unit;
  if (q.get_den() != 1)
    throw std::invalid_argument("domain is not aligned to the triadic lattice");
  return {scale, static_cast<std::int64_t>(q.get_num().get_si())};
}

QuadScalar avg_over(const PiecewiseFn& f, const Rational& lo, const Rational& hi) {
  return f.integrate(lo, hi) * Rational(1 / (hi - lo));
}

// Maximal triadic intervals T inside `t` with avg_f(T) > threshold.
void stopping_scan(const PiecewiseFn& f, const TriadicInterval& t,
                   const Rational& unit_floor, const QuadScalar& threshold,
                   std::vector<TriadicInterval>& out) {
  if (avg_over(f, t.lo(), t.hi()).cmp(threshold) > 0) {
    out.push_back(t);
    return;
  }
  if (t.length() <= unit_floor) return;
  for (const TriadicInterval& c : t.children())
    stopping_scan(f, c, unit_floor, threshold, out);
}

}  // namespace

SawyerReport sawyer_verify(const PiecewiseFn& f, const PiecewiseFn& w,
                           const Rational& a) {
  if (a <= 1) throw std::invalid_argument("generation ratio must exceed 1");
  if (f.domain_lo() != w.domain_lo() || f.domain_hi() != w.domain_hi())
    throw std::invalid_argument("mismatched grids");
  for (size_t i = 0; i < f.piece_count(); ++i)
    if (f.value(i).sgn() < 0) throw std::invalid_argument("f must be nonnegative");
  if (!w.all_positive()) throw std::invalid_argument("w must be positive");

  const TriadicInterval root = domain_as_triadic(f);
  const PiecewiseFn sigma = w.reciprocal();
  const PiecewiseFn mf = triadic_maximal(f, root);
  // finest breakpoint scale shared by f and the maximal function grid
  Rational unit_floor = mf.piece_hi(0) - mf.piece_lo(0);

  SawyerReport rep;
  rep.maximal_norm_sq = mf.squared().multiply(sigma).total_integral();

  if (f.total_integral().sgn() == 0) {
    rep.packing_ok = rep.chain_ok = rep.disjoint_ok = true;
    return rep;
  }

  QuadScalar max_m;
  for (size_t i = 0; i < mf.piece_count(); ++i)
    if (mf.value(i).cmp(max_m) > 0) max_m = mf.value(i);
  const QuadScalar root_avg = avg_over(f, f.domain_lo(), f.domain_hi());

  const QuadScalar a_inv = QuadScalar(Rational(a)).recip();
  auto gen_below = [&](const QuadScalar& v) {
    // unique g with a^g < v <= a^(g+1)
    long g = 0;
    QuadScalar power(1);
    while (power.cmp(v) >= 0) {
      power *= a_inv;
      --g;
    }
    while ((power * Rational(a)).cmp(v) < 0) {
      power *= Rational(a);
      ++g;
    }
    return g;
  };
  rep.gen_lo = gen_below(root_avg);
  rep.gen_hi = gen_below(max_m);

  // Stopping families per generation.
  std::vector<std::vector<TriadicInterval>> gens;
  QuadScalar power(1);
  for (long i = 0; i < rep.gen_lo; ++i) power *= Rational(a);
  for (long i = 0; i > rep.gen_lo; --i) power *= a_inv;
  for (long g = rep.gen_lo; g <= rep.gen_hi; ++g) {
    std::vector<TriadicInterval> fam;
    stopping_scan(f, root, unit_floor, power, fam);
    std::sort(fam.begin(), fam.end(),
              [](const TriadicInterval& x, const TriadicInterval& y) {
                return x.lo() < y.lo();
              });
    gens.push_back(std::move(fam));
    power *= Rational(a);
  }

  rep.disjoint_ok = true;
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    for (size_t j = 0; j + 1 < gens[gi].size(); ++j)
      if (gens[gi][j].hi() > gens[gi][j + 1].lo()) rep.disjoint_ok = false;
    if (gi > 0)
      for (const TriadicInterval& t : gens[gi]) {
        bool inside = false;
        for (const TriadicInterval& up : gens[gi - 1])
          if (up.lo() <= t.lo() && t.hi() <= up.hi()) inside = true;
        if (!inside) rep.disjoint_ok = false;
      }
  }

  // Kept sets (interval minus the next generation) and alphas.
  rep.chain_rhs = QuadScalar(0);
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    const std::vector<TriadicInterval>* next =
        gi + 1 < gens.size() ? &gens[gi + 1] : nullptr;
    for (const TriadicInterval& t : gens[gi]) {
      StoppingInterval si;
      si.iv = t;
      si.gen = rep.gen_lo + static_cast<long>(gi);
      si.avg_f = avg_over(f, t.lo(), t.hi());
      Rational x = t.lo();
      if (next) {
        for (const TriadicInterval& c : *next) {
          if (c.lo() < t.lo() || c.hi() > t.hi()) continue;
          if (c.lo() > x) si.kept.emplace_back(x, c.lo());
          x = c.hi();
        }
      }
      if (x < t.hi()) si.kept.emplace_back(x, t.hi());
      for (const auto& [klo, khi] : si.kept) si.sigma_kept += sigma.integrate(klo, khi);
      const QuadScalar density = w.integrate(t.lo(), t.hi()) * Rational(1 / t.length());
      si.alpha = density * density * si.sigma_kept;
      rep.chain_rhs += si.avg_f * si.avg_f * si.sigma_kept;
      rep.stopping.push_back(std::move(si));
    }
  }
  rep.chain_rhs *= Rational(a * a);
  rep.chain_ok = rep.maximal_norm_sq.cmp(rep.chain_rhs) <= 0;

  // Packing: for each stopping R, the alphas inside R are dominated by the
  // testing integral of w over R.
  rep.packing_ok = true;
  for (StoppingInterval& si : rep.stopping) {
    QuadScalar lhs;
    for (const StoppingInterval& other : rep.stopping)
      if (si.iv.lo() <= other.iv.lo() && other.iv.hi() <= si.iv.hi())
        lhs += other.alpha;
    const PiecewiseFn w_r = w.restrict_to(si.iv.lo(), si.iv.hi());
    const PiecewiseFn m_r = triadic_maximal(w_r, si.iv);
    const PiecewiseFn sigma_r = sigma.restrict_to(si.iv.lo(), si.iv.hi());
    si.packing_lhs = lhs;
    si.packing_rhs = m_r.squared().multiply(sigma_r).total_integral();
    if (lhs.cmp(si.packing_rhs) > 0) rep.packing_ok = false;
  }
  return rep;
}

std::pair<PiecewiseFn, PiecewiseFn> random_triadic_pair(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> depth_d(2, 4);
  std::uniform_int_distribution<int> shift_d(0, 2);
  std::uniform_int_distribution<long> fval(0, 12);
  std::uniform_int_distribution<long> fden(1, 4);
  std::uniform_int_distribution<long> wval(1, 16);
  std::uniform_int_distribution<long> wden(1, 5);
  std::uniform_int_distribution<int> zero_d(0, 2);

  const int depth = depth_d(rng);
  long cells = 1;
  for (int i = 0; i < depth; ++i) cells *= 3;
  const Rational lo(shift_d(rng));  // integer-aligned triadic domain [lo, lo+1)
  const Rational unit = pow3(-depth);
  std::vector<Piece> fp, wp;
  bool any_mass = false;
  for (long c = 0; c < cells; ++c) {
    const Rational a = lo + c * unit;
    const Rational b = lo + (c + 1) * unit;
    const bool zero = zero_d(rng) == 0;
    const Rational v = zero ? Rational(0) : rat(fval(rng), fden(rng));
    if (sgn(v) > 0) any_mass = true;
    fp.push_back({a, b, QuadScalar(v)});
    wp.push_back({a, b, QuadScalar(rat(wval(rng), wden(rng)))});
  }
  if (!any_mass) fp.front().value = QuadScalar(1);
  return {PiecewiseFn::from_pieces(std::move(fp)),
          PiecewiseFn::from_pieces(std::move(wp))};
}

}  // namespace a2lab
