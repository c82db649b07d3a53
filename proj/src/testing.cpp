#include "a2lab/testing.hpp"

#include <future>
#include <set>

#include "a2lab/float_interval.hpp"
#include "a2lab/maximal.hpp"

namespace a2lab {

namespace {

// w chi_J as a compact step function, reading the weight periodically.
PiecewiseFn restrict_periodic(const PeriodicFn& w, const Rational& lo,
                              const Rational& hi) {
  const long first = static_cast<long>(floor_rat(lo).get_si());
  const long last = static_cast<long>(floor_rat(hi).get_si());
  return w.window(first, hi == Rational(last) ? last - 1 : last)
      .restrict_to(lo, hi);
}

QuadScalar testing_value_of(const PiecewiseFn& piece_of_w) {
  const MaximalEnvelope env = maximal_compact(piece_of_w);
  QuadScalar energy;  // integral of envelope^2 / w over J
  QuadScalar mass;    // w(J)
  for (size_t i = 0; i < piece_of_w.piece_count(); ++i) {
    const Rational len = piece_of_w.piece_hi(i) - piece_of_w.piece_lo(i);
    const QuadScalar& v = piece_of_w.value(i);
    energy += len * env.per_piece_sup[i] * env.per_piece_sup[i] * v.recip();
    mass += len * v;
  }
  return energy * mass.recip();
}

}  // namespace

QuadScalar testing_value(const PeriodicFn& w, const JPair& j) {
  if (!w.base().all_positive())
    throw std::invalid_argument("testing requires a positive weight");
  return testing_value_of(restrict_periodic(w, j.lo(), j.hi()));
}

TrialBound testing_trial_lower(const ConstructedWeight& cw, const JPair& trial) {
  const PeriodicFn sigma_p(cw.sigma);
  const PiecewiseFn g = restrict_periodic(sigma_p, trial.lo(), trial.hi());
  const size_t n = g.piece_count();
  std::vector<QuadScalar> prefix(n + 1);
  for (size_t i = 0; i < n; ++i)
    prefix[i + 1] = prefix[i] + (g.piece_hi(i) - g.piece_lo(i)) * g.value(i);

  QuadScalar num, den;
  for (size_t i = 0; i < n; ++i) {
    const Rational len = g.piece_hi(i) - g.piece_lo(i);
    // Pointwise-valid covering averages: the piece itself, the prefix and
    // suffix through it, and the whole trial interval.
    QuadScalar m = g.value(i);
    const QuadScalar pre =
        prefix[i + 1] * Rational(1 / (g.piece_hi(i) - g.domain_lo()));
    const QuadScalar suf = (prefix[n] - prefix[i]) *
                           Rational(1 / (g.domain_hi() - g.piece_lo(i)));
    const QuadScalar whole = prefix[n] * Rational(1 / g.length());
    for (const QuadScalar* c : {&pre, &suf, &whole})
      if (c->cmp(m) > 0) m = *c;
    const QuadScalar sig = g.value(i);  // sigma equals the trial value here
    num += len * m * m * sig;
    den += len * sig * sig * sig;
  }
  return {trial, num * den.recip()};
}

TestingReport testing_constant(const ConstructedWeight& cw,
                               const TestingOptions& opt) {
  const PeriodicFn& w = cw.periodic;
  const PiecewiseFn& base = cw.w;
  TestingReport rep;

  // Finest breakpoint gap fixes the exhaustive scale range: below it a pair
  // meets at most one breakpoint and the adjacent-ratio cap applies.
  Rational min_gap = 1;
  for (size_t i = 0; i < base.piece_count(); ++i)
    min_gap = std::min(min_gap, Rational(base.piece_hi(i) - base.piece_lo(i)));
  int floor_m = 1;
  {
    Rational len = rat(2, 3);
    while (len >= min_gap) {
      ++floor_m;
      len /= 3;
    }
  }
  if (opt.scale_floor > 0) {
    if (opt.scale_floor < floor_m)
      throw std::invalid_argument("scale floor coarser than the finest gap");
    floor_m = opt.scale_floor;
  }
  rep.scale_floor = floor_m;

  rep.measured_sup = QuadScalar(1);
  rep.argmax = JPair{0, 0};

  const std::vector<Rational> grid = base.grid();
  for (int m = 1; m <= floor_m; ++m) {
    const Rational unit = pow3(-m);
    long period = 1;
    for (int i = 0; i < m && period <= (1L << 40); ++i) period *= 3;

    std::set<long> candidates;
    if (period <= static_cast<long>(4 * grid.size())) {
      for (long n = 0; n < period; ++n) candidates.insert(n);
    } else {
      for (const Rational& b : grid) {
        const long g = static_cast<long>(floor_rat(b / unit).get_si());
        for (long n : {g - 1, g}) candidates.insert(((n % period) + period) % period);
      }
    }

    ScaleMax sm;
    sm.depth_m = m;
    sm.max_value = QuadScalar(1);  // constant pairs exist at every fine scale
    sm.argmax = JPair{-m, 0};
    std::vector<long> cand(candidates.begin(), candidates.end());

    const int workers = std::max(1, opt.threads);
    std::vector<std::future<ScaleMax>> futs;
    const size_t chunk = (cand.size() + workers - 1) / std::max<size_t>(1, workers);
    for (int t = 0; t < workers && t * chunk < cand.size(); ++t) {
      const size_t lo = t * chunk, hi = std::min(cand.size(), lo + chunk);
      futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
        ScaleMax local;
        local.depth_m = m;
        local.max_value = QuadScalar(1);
        local.argmax = JPair{-m, 0};
        for (size_t c = lo; c < hi; ++c) {
          const JPair j{-m, cand[c]};
          const PiecewiseFn f = restrict_periodic(w, j.lo(), j.hi());
          if (f.piece_count() == 1) {
            ++local.skipped_constant;
            continue;  // exact value 1
          }
          const QuadScalar v = testing_value_of(f);
          ++local.evaluated;
          if (v.cmp(local.max_value) > 0) {
            local.max_value = v;
            local.argmax = j;
          }
        }
        return local;
      }));
    }
    for (auto& fu : futs) {
      const ScaleMax local = fu.get();
      sm.evaluated += local.evaluated;
      sm.skipped_constant += local.skipped_constant;
      if (local.max_value.cmp(sm.max_value) > 0) {
        sm.max_value = local.max_value;
        sm.argmax = local.argmax;
      }
    }
    if (sm.max_value.cmp(rep.measured_sup) > 0) {
      rep.measured_sup = sm.max_value;
      rep.argmax = sm.argmax;
    }
    rep.per_scale.push_back(std::move(sm));
  }

  // Periodicity leaves one translation class per coarse length.
  for (long len : {2L, 6L, 18L}) {
    const QuadScalar v = testing_value_of(w.window(0, len - 1));
    if (v.cmp(rep.measured_sup) > 0) {
      rep.measured_sup = v;
      rep.argmax = JPair{static_cast<int>(len == 2 ? 0 : (len == 6 ? 1 : 2)), 0};
    }
    rep.coarse.emplace_back(len, v);
  }

  rep.coarse_certificate =
      Rational(25) * cw.w_tilde.squared().multiply(cw.sigma).total_integral();

  // Any pair below the floor sees at most two adjacent values (periodically).
  QuadScalar cap(1);
  const size_t n = base.piece_count();
  for (size_t i = 0; i < n; ++i) {
    const QuadScalar& a = base.value(i);
    const QuadScalar& b = base.value((i + 1) % n);
    const QuadScalar r = a.cmp(b) >= 0 ? a * b.recip() : b * a.recip();
    const QuadScalar r2 = r * r;
    if (r2.cmp(cap) > 0) cap = r2;
  }
  rep.fine_cap = cap;

  rep.certified_sup = rep.measured_sup;
  if (rep.coarse_certificate.cmp(rep.certified_sup) > 0)
    rep.certified_sup = rep.coarse_certificate;
  if (rep.fine_cap.cmp(rep.certified_sup) > 0) rep.certified_sup = rep.fine_cap;

  rep.m_upper =
      24 * FloatInterval::of_quad(rep.certified_sup, opt.prec_bits).sqrt().hi_double();

  rep.best_trial = testing_trial_lower(cw, rep.argmax.scale <= 0
                                               ? rep.argmax
                                               : JPair{0, 0});
  for (const JPair t : {JPair{0, 0}, JPair{-1, 0}, JPair{-1, 1}, JPair{-1, 2}}) {
    const TrialBound tb = testing_trial_lower(cw, t);
    if (tb.ratio_sq.cmp(rep.best_trial.ratio_sq) > 0) rep.best_trial = tb;
  }
  rep.m_lower =
      FloatInterval::of_quad(rep.best_trial.ratio_sq, opt.prec_bits).sqrt().lo_double();
  return rep;
}

}  // namespace a2lab
