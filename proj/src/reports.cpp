#include "a2lab/reports.hpp"

#include <cmath>
#include <sstream>

#include "a2lab/hilbert.hpp"
#include "a2lab/lower_bound.hpp"
#include "a2lab/quadrature.hpp"
#include "a2lab/sawyer.hpp"

namespace a2lab {

namespace {

constexpr long kMaxScalingPieces = 200000;

Rational truncation_factor(const WeightParams& prm) {
  // 1 - (1 - 3^(1-k))^nu, the finite-depth share of the full-depth level sum
  Rational base = 1 - pow3(1 - prm.k);
  Rational pw = 1;
  for (long i = 0; i < prm.nu; ++i) pw *= base;
  return 1 - pw;
}

}  // namespace

std::string scaling_csv(const RunConfig& cfg, std::string* log) {
  std::vector<long> ks = cfg.k_list;
  std::vector<long> nus = cfg.nu_list;
  if (ks.empty()) {
    if (cfg.k) ks.push_back(*cfg.k);
    else ks = {2, 3};
  }
  if (nus.empty()) nus.assign(ks.size(), -1);
  if (nus.size() != ks.size())
    throw std::invalid_argument("k list and nu list differ in length");

  std::ostringstream os;
  os << "k,nu,p,truncation_factor,testing_sup,m_upper,h_l2sigma,"
        "ratio_h_over_m,min_abs_h_over_2l\n";
  for (size_t i = 0; i < ks.size(); ++i) {
    long k = ks[i];
    long nu_req = nus[i];
    WeightParams prm;
    try {
      prm = derive_params_from_k(
          k, nu_req < 0 ? std::nullopt : std::optional<long>(nu_req));
      const long pieces = piece_count_formula(prm.k, prm.nu);
      if (pieces > kMaxScalingPieces)
        throw std::invalid_argument("segmentation of " + std::to_string(pieces) +
                                    " pieces exceeds the sweep budget");
    } catch (const std::exception& e) {
      if (log)
        *log += "skipped k=" + std::to_string(k) + " nu=" + std::to_string(nu_req) +
                ": " + e.what() + "\n";
      continue;
    }
    const ConstructedWeight cw = build_weight(prm);
    const VerifyOptions vo = cfg.verify_options();
    TestingOptions topt;
    topt.threads = vo.threads;
    topt.prec_bits = vo.prec_bits;
    const TestingReport tr = testing_constant(cw, topt);

    os << prm.k << ',' << prm.nu << ',' << rat_to_string(prm.p) << ','
       << rat_to_string(truncation_factor(prm)) << ','
       << tr.measured_sup.to_double() << ',' << tr.m_upper << ',';
    if (prm.nu >= 1) {
      const QuadratureResult q = hilbert_l2sigma(cw, cfg.tol, vo.threads);
      os << q.value << ',' << q.value / tr.m_upper << ',';
      LowerBoundOptions lopt;
      lopt.samples_per_interval = vo.samples_per_interval;
      lopt.max_intervals_per_level = vo.max_intervals_per_level;
      lopt.prec_bits = vo.prec_bits;
      lopt.threads = vo.threads;
      std::ostringstream col;
      bool first = true;
      for (const LevelReport& lr : lower_bound_report(cw, lopt)) {
        if (!first) col << ';';
        col << 'l' << lr.level << ':'
            << lr.min_abs_h / std::ldexp(1.0, static_cast<int>(lr.level));
        first = false;
      }
      os << '"' << col.str() << '"';
    } else {
      os << ",,";  // no tail levels at depth 0
    }
    os << '\n';
  }
  return os.str();
}

std::string profile_csv(const ConstructedWeight& cw, const RunConfig& cfg) {
  const int n = std::max(8, cfg.profile_samples);
  HilbertEvaluator ev(hilbert_terms(cw.w), digits_to_bits(cfg.precision_digits));
  std::ostringstream os;
  os << "x,value,error_bound,region_tag,level\n";
  os.precision(17);
  for (int i = 0; i < n; ++i) {
    Rational x = rat(2 * i + 1, 2 * n);
    // The grid avoids breakpoints (power-of-two denominators against 2*3^m),
    // but nudge defensively if a collision ever appears.
    bool hit = false;
    for (const Rational& b : cw.w.grid())
      if (b == x) hit = true;
    if (hit) x += rat(1, 7 * n);
    const FloatInterval v = ev.at(x);
    const size_t piece = cw.w.find_piece(x);
    os << x.get_d() << ',' << v.mid_double() << ',' << v.width_double() << ','
       << region_kind_name(cw.tags[piece].kind) << ',' << cw.tags[piece].level
       << '\n';
  }
  return os.str();
}

Json sawyer_demo_json(const RunConfig& cfg) {
  const auto [f, w] = random_triadic_pair(cfg.seed);
  const SawyerReport rep = sawyer_verify(f, w, rat(2));
  Json j;
  j["schema"] = "a2lab-sawyer/1";
  j["seed"] = cfg.seed;
  j["f"] = pcf_json(f);
  j["w"] = pcf_json(w);
  j["gen_lo"] = rep.gen_lo;
  j["gen_hi"] = rep.gen_hi;
  Json stops = Json::array();
  for (const StoppingInterval& s : rep.stopping) {
    stops.push_back(Json{{"lo", rational_json(s.iv.lo())},
                         {"hi", rational_json(s.iv.hi())},
                         {"gen", s.gen},
                         {"avg_f", quad_json(s.avg_f)},
                         {"alpha", quad_json(s.alpha)},
                         {"packing_lhs", quad_json(s.packing_lhs)},
                         {"packing_rhs", quad_json(s.packing_rhs)}});
  }
  j["stopping"] = std::move(stops);
  j["maximal_norm_sq"] = quad_json(rep.maximal_norm_sq);
  j["chain_rhs"] = quad_json(rep.chain_rhs);
  j["packing_ok"] = rep.packing_ok;
  j["chain_ok"] = rep.chain_ok;
  j["disjoint_ok"] = rep.disjoint_ok;
  return j;
}

}  // namespace a2lab
