#include "a2lab/lower_bound.hpp"

#include <algorithm>
#include <future>

#include "a2lab/hilbert.hpp"

namespace a2lab {

namespace {

struct IntervalWork {
  ComponentChecks checks;
  std::vector<TelescopeCheck> telescopes;
  bool telescope_ok = true;
};

IntervalWork process_interval(const ConstructedWeight& cw, const TailRecord& tail,
                              const LowerBoundOptions& opt) {
  const mpfr_prec_t prec = opt.prec_bits;
  const WeightParams& prm = cw.params;
  const BuildNode& node = cw.nodes[tail.node_index];
  const long l = tail.level;
  const Rational omega = pow2(l);
  const Rational& a = node.lo;
  const Rational& b = node.hi;
  const Rational suffix_lo = b - pow3(1 - prm.k) * (b - a);  // final-stage start

  // Support split of w chi_[0,1): [0,a) | [a, suffix_lo) | [suffix_lo, tail_lo)
  // | tail | [b, 1).
  std::optional<HilbertEvaluator> eval_a, eval_e;
  if (a > 0) eval_a.emplace(hilbert_terms(cw.w.restrict_to(0, a)), prec);
  if (b < 1) eval_e.emplace(hilbert_terms(cw.w.restrict_to(b, 1)), prec);
  HilbertEvaluator eval_b(hilbert_terms(cw.w.restrict_to(a, suffix_lo)), prec);
  HilbertEvaluator eval_c(hilbert_terms(cw.w.restrict_to(suffix_lo, tail.lo)), prec);
  HilbertEvaluator eval_d(hilbert_terms(cw.w.restrict_to(tail.lo, b)), prec);

  const Rational center = (tail.lo + tail.hi) / 2;
  const Rational tlen = tail.hi - tail.lo;
  std::vector<Rational> xs{center};
  if (opt.samples_per_interval >= 3) {
    xs.push_back(center - tlen / 8);
    xs.push_back(center + tlen / 8);
  }
  if (opt.samples_per_interval >= 5) {
    xs.push_back(center - tlen / 16);
    xs.push_back(center + tlen / 16);
  }

  const FloatInterval d_bound =
      FloatInterval::of_rational(4 * omega, prec) *
      FloatInterval::log_of_rational(3, prec);
  const Rational b_bound = rat(2, 3) * (prm.k - 1) * omega;
  const Rational e_bound = 13 * omega;

  IntervalWork w;
  w.checks.a_ok = w.checks.b_ok = w.checks.c_ok = w.checks.d_ok = w.checks.e_ok =
      true;
  double min_abs_h = -1;
  for (const Rational& x : xs) {
    const FloatInterval A = eval_a ? eval_a->at(x) : FloatInterval(prec);
    const FloatInterval B = eval_b.at(x);
    const FloatInterval C = eval_c.at(x);
    const FloatInterval D = eval_d.at(x);
    const FloatInterval E = eval_e ? eval_e->at(x) : FloatInterval(prec);
    if (eval_a && !A.certainly_positive()) w.checks.a_ok = false;
    if (!B.certainly_gt(b_bound)) w.checks.b_ok = false;
    if (!C.certainly_positive()) w.checks.c_ok = false;
    if (!D.abs().certainly_le_iv(d_bound)) w.checks.d_ok = false;
    if (eval_e && !E.abs().certainly_le(e_bound)) w.checks.e_ok = false;
    const FloatInterval H = A + B + C + D + E;
    const double lo = H.abs().lo_double();
    if (min_abs_h < 0 || lo < min_abs_h) min_abs_h = lo;
    for (const FloatInterval* v : {&A, &B, &C, &D, &E})
      w.checks.max_bracket_width =
          std::max(w.checks.max_bracket_width, v->width_double());
  }
  w.checks.abs_h_lo = min_abs_h < 0 ? 0 : min_abs_h;

  // Telescoping chain along the ancestor carriers: each annulus between
  // consecutive right endpoints, evaluated at the monotonicity checkpoint.
  long idx = static_cast<long>(tail.node_index);
  for (long i = 1; i <= l; ++i) {
    const BuildNode& child = cw.nodes[idx];
    const long up = child.parent;
    const BuildNode& par = cw.nodes[up];
    TelescopeCheck tc;
    tc.step = i;
    tc.checkpoint = child.hi - (child.hi - child.lo) * pow3(-prm.k) / 4;
    HilbertEvaluator ev(hilbert_terms(cw.w.restrict_to(child.hi, par.hi)), prec);
    const FloatInterval v = ev.at(tc.checkpoint);
    tc.value_abs_hi = v.abs().hi_double();
    tc.ok = v.abs().certainly_le(13 * pow2(l - i));
    if (!tc.ok) w.telescope_ok = false;
    w.telescopes.push_back(std::move(tc));
    idx = up;
  }
  return w;
}

}  // namespace

std::vector<LevelReport> lower_bound_report(const ConstructedWeight& cw,
                                            const LowerBoundOptions& opt) {
  if (cw.params.nu < 1)
    throw std::invalid_argument("component report needs depth >= 1");
  const TailSets ts = tail_sets(cw);
  const WeightParams& prm = cw.params;

  std::vector<LevelReport> out(static_cast<size_t>(prm.nu));
  struct Item {
    long level;
    const TailRecord* tail;
  };
  std::vector<Item> items;
  for (long l = 0; l < prm.nu; ++l) {
    LevelReport& lr = out[static_cast<size_t>(l)];
    lr.level = l;
    lr.interval_count = ts.tails_by_level[l].size();
    lr.sampled_intervals = std::min<size_t>(
        lr.interval_count, static_cast<size_t>(opt.max_intervals_per_level));
    lr.sigma_value = (1 + prm.epsilon) / (4 * prm.epsilon) * prm.p / pow2(l);
    lr.half_measure = ts.half_measure[l];
    lr.components_ok = true;
    lr.telescope_ok = true;
    lr.min_abs_h = -1;
    // tails are emitted left to right, so the first N are the leftmost N
    for (size_t i = 0; i < lr.sampled_intervals; ++i)
      items.push_back({l, &ts.tails_by_level[l][i]});
  }

  std::vector<IntervalWork> works(items.size());
  const int workers = std::max(1, opt.threads);
  std::atomic<size_t> next{0};
  std::vector<std::future<void>> futs;
  for (int t = 0; t < workers; ++t)
    futs.push_back(std::async(std::launch::async, [&]() {
      for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
        works[i] = process_interval(cw, *items[i].tail, opt);
    }));
  for (auto& f : futs) f.get();

  for (size_t i = 0; i < items.size(); ++i) {
    LevelReport& lr = out[static_cast<size_t>(items[i].level)];
    const IntervalWork& w = works[i];
    lr.sample_count += opt.samples_per_interval >= 5 ? 5
                       : opt.samples_per_interval >= 3 ? 3
                                                       : 1;
    if (!(w.checks.a_ok && w.checks.b_ok && w.checks.c_ok && w.checks.d_ok &&
          w.checks.e_ok))
      lr.components_ok = false;
    if (!w.telescope_ok) lr.telescope_ok = false;
    if (lr.min_abs_h < 0 || w.checks.abs_h_lo < lr.min_abs_h)
      lr.min_abs_h = w.checks.abs_h_lo;
    lr.max_bracket_width = std::max(lr.max_bracket_width, w.checks.max_bracket_width);
    if (lr.telescopes.empty()) lr.telescopes = w.telescopes;  // keep one chain
  }
  for (LevelReport& lr : out) {
    if (lr.min_abs_h < 0) lr.min_abs_h = 0;
    lr.lower_bound_integral =
        lr.min_abs_h * lr.min_abs_h *
        Rational(lr.sigma_value * lr.half_measure).get_d();
  }
  return out;
}

}  // namespace a2lab
