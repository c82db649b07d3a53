#include "a2lab/verify.hpp"

#include <sstream>

#include "a2lab/diagnostics.hpp"
#include "a2lab/lower_bound.hpp"
#include "a2lab/maximal.hpp"
#include "a2lab/quadrature.hpp"
#include "a2lab/sawyer.hpp"

namespace a2lab {

namespace {

std::string interval_str(const Rational& lo, const Rational& hi) {
  return "[" + rat_to_string(lo) + ", " + rat_to_string(hi) + ")";
}

CheckResult check_av(const ConstructedWeight& cw) {
  CheckResult c{"av", "every block has average 2^l and reciprocal average 2^-l p",
                true, true, ""};
  for (const BuildNode& node : cw.nodes) {
    const Rational len = node.hi - node.lo;
    const bool ok_w = cw.w.integrate(node.lo, node.hi) ==
                      QuadScalar(pow2(node.level) * len);
    const bool ok_s = cw.sigma.integrate(node.lo, node.hi) ==
                      QuadScalar(pow2(-node.level) * cw.params.p * len);
    if (!ok_w || !ok_s) {
      c.pass = false;
      c.witness = "block " + interval_str(node.lo, node.hi);
      return c;
    }
  }
  c.witness = std::to_string(cw.nodes.size()) + " blocks";
  return c;
}

CheckResult check_avest(const ConstructedWeight& cw) {
  CheckResult c{"avest",
                "one-sided running averages stay below 3*2^l and (9/2)*2^l",
                true, true, ""};
  for (const BuildNode& node : cw.nodes) {
    const EdgeAverages ea = prefix_suffix_sup(cw, node);
    if (ea.prefix_sup.cmp(QuadScalar(3 * pow2(node.level))) > 0 ||
        ea.suffix_sup.cmp(QuadScalar(rat(9, 2) * pow2(node.level))) > 0) {
      c.pass = false;
      c.witness = "block " + interval_str(node.lo, node.hi);
      return c;
    }
  }
  c.witness = std::to_string(cw.nodes.size()) + " blocks";
  return c;
}

CheckResult check_al(const ConstructedWeight& cw) {
  CheckResult c{"al", "tail-set measures follow the geometric law, halves exact",
                true, true, ""};
  const TailSets ts = tail_sets(cw);
  for (long l = 0; l < cw.params.nu; ++l) {
    if (ts.measure[l] != expected_tail_measure(cw.params, l) ||
        ts.half_measure[l] * 2 != ts.measure[l]) {
      c.pass = false;
      c.witness = "level " + std::to_string(l);
      return c;
    }
  }
  c.witness = std::to_string(cw.params.nu) + " levels";
  return c;
}

CheckResult check_pieces(const ConstructedWeight& cw) {
  CheckResult c{"pieces", "raw piece count matches the recurrence", true, true, ""};
  const long expect = piece_count_formula(cw.params.k, cw.params.nu);
  c.pass = static_cast<long>(cw.w.piece_count()) == expect;
  c.witness = std::to_string(cw.w.piece_count()) + " vs " + std::to_string(expect);
  return c;
}

CheckResult check_maxest(const ConstructedWeight& cw, const VerifyOptions& opt) {
  CheckResult c{"maxest",
                "certified periodic maximal envelope <= (9/2) * scaffold",
                true, true, ""};
  const PeriodicMaximal pm = maximal_periodic(cw.periodic, opt.window);
  for (size_t i = 0; i < pm.upper.size(); ++i) {
    if (pm.upper[i].cmp(QuadScalar(rat(9, 2)) * cw.w_tilde.value(i)) > 0) {
      c.pass = false;
      c.witness = "piece " + interval_str(cw.w.piece_lo(i), cw.w.piece_hi(i));
      return c;
    }
  }
  c.witness = std::to_string(pm.upper.size()) + " pieces, window " +
              std::to_string(opt.window);
  return c;
}

CheckResult check_partcase(const ConstructedWeight& cw) {
  CheckResult c{"partcase",
                "scaffold energy over every suffix interval <= 30 p^2 w",
                true, true, ""};
  const PiecewiseFn energy = cw.w_tilde.squared().multiply(cw.sigma);
  const QuadScalar bound(30 * cw.params.p * cw.params.p);
  long count = 0;
  for (const BuildNode& node : cw.nodes) {
    Rational len = node.hi - node.lo;
    for (long m = 0; m + 1 < cw.params.k; ++m) {
      const Rational lo = node.hi - len;
      const QuadScalar lhs = energy.integrate(lo, node.hi);
      const QuadScalar rhs = bound * cw.w.integrate(lo, node.hi);
      if (lhs.cmp(rhs) > 0) {
        c.pass = false;
        c.witness = "block " + interval_str(node.lo, node.hi) + " suffix " +
                    rat_to_string(len);
        return c;
      }
      len /= 3;
      ++count;
    }
  }
  c.witness = std::to_string(count) + " suffix intervals";
  return c;
}

CheckResult check_testing(const TestingReport& tr, const ConstructedWeight& cw) {
  CheckResult c{"testing",
                "testing supremum within the case-analysis caps", true, true, ""};
  const Rational p2 = cw.params.p * cw.params.p;
  bool ok = tr.certified_sup.cmp(QuadScalar(1875 * p2)) <= 0;
  // Per-regime caps: coarse 25*30 p^2, all exact values 25*75 p^2, fine
  // two-value windows 18^2 p^2.
  for (const auto& [len, v] : tr.coarse)
    ok = ok && v.cmp(QuadScalar(750 * p2)) <= 0;
  ok = ok && tr.measured_sup.cmp(QuadScalar(1875 * p2)) <= 0;
  ok = ok && tr.fine_cap.cmp(QuadScalar(324 * p2)) <= 0;
  ok = ok && tr.coarse_certificate.cmp(QuadScalar(750 * p2)) <= 0;
  ok = ok && tr.m_lower <= tr.m_upper;
  c.pass = ok;
  std::ostringstream os;
  os << "measured sup " << tr.measured_sup.to_double() << ", certified "
     << tr.certified_sup.to_double() << ", 1875 p^2 = "
     << QuadScalar(1875 * p2).to_double();
  c.witness = os.str();
  return c;
}

CheckResult check_components(const ConstructedWeight& cw,
                             const std::vector<LevelReport>& levels) {
  CheckResult c{"hilbest-components",
                "transform components: signs, size of B, bounds on D and E, "
                "telescoping checkpoints",
                true, false, ""};
  for (const LevelReport& lr : levels) {
    if (!lr.components_ok || !lr.telescope_ok) {
      c.pass = false;
      c.witness = "level " + std::to_string(lr.level);
      return c;
    }
  }
  size_t samples = 0;
  for (const LevelReport& lr : levels) samples += lr.sample_count;
  c.witness = std::to_string(samples) + " samples across " +
              std::to_string(levels.size()) + " levels";
  return c;
}

CheckResult check_sawyer(const VerifyOptions& opt) {
  CheckResult c{"sawyer",
                "stopping-time packing and level-set chain hold exactly on "
                "seeded random instances",
                true, true, ""};
  for (int i = 0; i < opt.sawyer_instances; ++i) {
    const auto [f, w] = random_triadic_pair(opt.seed + static_cast<std::uint64_t>(i));
    const SawyerReport rep = sawyer_verify(f, w, rat(2));
    if (!rep.packing_ok || !rep.chain_ok || !rep.disjoint_ok) {
      c.pass = false;
      c.witness = "seed " + std::to_string(opt.seed + i);
      return c;
    }
  }
  c.witness = std::to_string(opt.sawyer_instances) + " instances";
  return c;
}

}  // namespace

VerifyReport run_verify(const ConstructedWeight& cw, const VerifyOptions& opt) {
  VerifyReport rep;
  rep.checks.push_back(check_av(cw));
  rep.checks.push_back(check_avest(cw));
  rep.checks.push_back(check_al(cw));
  rep.checks.push_back(check_pieces(cw));
  rep.checks.push_back(check_maxest(cw, opt));
  rep.checks.push_back(check_partcase(cw));
  TestingOptions topt;
  topt.threads = opt.threads;
  topt.prec_bits = opt.prec_bits;
  topt.scale_floor = opt.scale_floor;
  rep.checks.push_back(check_testing(testing_constant(cw, topt), cw));
  if (cw.params.nu >= 1) {
    LowerBoundOptions lopt;
    lopt.samples_per_interval = opt.samples_per_interval;
    lopt.max_intervals_per_level = opt.max_intervals_per_level;
    lopt.prec_bits = opt.prec_bits;
    lopt.threads = opt.threads;
    rep.checks.push_back(check_components(cw, lower_bound_report(cw, lopt)));
  } else {
    rep.checks.push_back(CheckResult{"hilbest-components",
                                     "skipped: no tail levels at depth 0", true,
                                     true, "depth 0"});
  }
  rep.checks.push_back(check_sawyer(opt));
  rep.all_passed = true;
  for (const CheckResult& c : rep.checks) rep.all_passed = rep.all_passed && c.pass;
  return rep;
}

Json verify_json(const VerifyReport& rep, const ConstructedWeight& cw) {
  Json j;
  j["schema"] = "a2lab-verify/1";
  j["params"] = params_json(cw.params);
  Json checks = Json::array();
  for (const CheckResult& c : rep.checks)
    checks.push_back(Json{{"id", c.id},
                          {"description", c.description},
                          {"status", c.pass ? "pass" : "fail"},
                          {"exact", c.exact},
                          {"witness", c.witness}});
  j["checks"] = std::move(checks);
  j["all_passed"] = rep.all_passed;
  Json trace = Json::array();
  const std::pair<const char*, const char*> rows[] = {
      {"av", "unit average and reciprocal average at every construction block"},
      {"avest", "one-sided average bounds at every construction block"},
      {"al", "geometric law for tail-set measures and their concentric halves"},
      {"pieces", "segmentation size recurrence"},
      {"maxest", "periodic maximal envelope against the step scaffold"},
      {"partcase", "suffix-interval energy of the scaffold against the weight"},
      {"testing", "indicator testing supremum over adjacent-pair intervals, "
                  "with coarse certificate and fine two-value cap"},
      {"hilbest-components", "five-way support split of the transform on "
                             "half-tail samples, with telescoping of the "
                             "right-hand mass"},
      {"sawyer", "stopping-time packing and level-set chain for the triadic "
                 "maximal operator"},
  };
  for (const auto& [id, prop] : rows)
    trace.push_back(Json{{"check", id}, {"property", prop}});
  j["traceability"] = std::move(trace);
  return j;
}

Json norms_json(const ConstructedWeight& cw, const VerifyOptions& opt,
                double quad_tol) {
  Json j;
  j["schema"] = "a2lab-norms/1";
  j["params"] = params_json(cw.params);

  TestingOptions topt;
  topt.threads = opt.threads;
  topt.prec_bits = opt.prec_bits;
  topt.scale_floor = opt.scale_floor;
  const TestingReport tr = testing_constant(cw, topt);
  Json per_scale = Json::array();
  for (const ScaleMax& s : tr.per_scale)
    per_scale.push_back(Json{{"m", s.depth_m},
                             {"max", quad_json(s.max_value)},
                             {"max_float", s.max_value.to_double()},
                             {"argmax", Json{{"j", s.argmax.scale}, {"n", s.argmax.pos}}},
                             {"evaluated", s.evaluated},
                             {"skipped_constant", s.skipped_constant}});
  Json coarse = Json::array();
  for (const auto& [len, v] : tr.coarse)
    coarse.push_back(Json{{"length", len}, {"value", quad_json(v)},
                          {"value_float", v.to_double()}});
  j["testing"] = Json{
      {"per_scale", std::move(per_scale)},
      {"coarse", std::move(coarse)},
      {"measured_sup", quad_json(tr.measured_sup)},
      {"measured_sup_float", tr.measured_sup.to_double()},
      {"argmax", Json{{"j", tr.argmax.scale}, {"n", tr.argmax.pos}}},
      {"coarse_certificate", quad_json(tr.coarse_certificate)},
      {"fine_cap", quad_json(tr.fine_cap)},
      {"certified_sup", quad_json(tr.certified_sup)},
      {"certified_sup_float", tr.certified_sup.to_double()},
      {"scale_floor", tr.scale_floor}};
  j["m_bracket"] = Json{{"lower", tr.m_lower}, {"upper", tr.m_upper}};

  const QuadratureResult q = hilbert_l2sigma(cw, quad_tol, opt.threads);
  j["h_l2sigma"] = Json{{"value", q.value},
                        {"value_sq", q.value_sq},
                        {"error_bound", q.error_bound},
                        {"nodes", q.node_count}};

  if (cw.params.nu >= 1) {
    LowerBoundOptions lopt;
    lopt.samples_per_interval = opt.samples_per_interval;
    lopt.max_intervals_per_level = opt.max_intervals_per_level;
    lopt.prec_bits = opt.prec_bits;
    lopt.threads = opt.threads;
    Json levels = Json::array();
    const double l2 = std::log(2.0);
    for (const LevelReport& lr : lower_bound_report(cw, lopt)) {
      levels.push_back(Json{
          {"level", lr.level},
          {"intervals", lr.interval_count},
          {"sampled_intervals", lr.sampled_intervals},
          {"samples", lr.sample_count},
          {"components_ok", lr.components_ok},
          {"telescope_ok", lr.telescope_ok},
          {"min_abs_h", lr.min_abs_h},
          {"min_abs_h_over_2l", lr.min_abs_h / std::exp(l2 * lr.level)},
          {"sigma_value", rational_json(lr.sigma_value)},
          {"half_measure", rational_json(lr.half_measure)},
          {"lower_bound_integral", lr.lower_bound_integral},
          {"max_bracket_width", lr.max_bracket_width}});
    }
    j["hilbest"] = std::move(levels);
  } else {
    j["hilbest"] = Json::array();
  }

  const Diagnostics d = a1_a2_diagnostics(cw, opt.window);
  j["diagnostics"] = Json{
      {"a1_lower", d.a1.lo.to_double()},
      {"a1_upper", d.a1.hi.to_double()},
      {"a2_lattice_max", quad_json(d.a2.lattice_max)},
      {"a2_lattice_max_float", d.a2.lattice_max.to_double()},
      {"a2_fine_cap_float", d.a2.fine_cap.to_double()},
      {"a2_scale_floor", d.a2.scale_floor}};
  return j;
}

}  // namespace a2lab
