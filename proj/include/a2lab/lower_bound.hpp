#pragma once

#include "a2lab/float_interval.hpp"
#include "a2lab/weight.hpp"

namespace a2lab {

/// Checks evaluated at one sample point inside a half-tail interval. The
/// transform of w chi_[0,1) splits by support into the mass left of the
/// carrier (A), the carrier up to its final-stage suffix (B), the flat part
/// of the suffix (C), the tail piece itself (D), and everything right of the
/// carrier (E).
struct ComponentChecks {
  bool a_ok = false;  // positive, or exactly zero when the left part is empty
  bool b_ok = false;  // B > (2/3)(k-1) 2^level
  bool c_ok = false;  // positive
  bool d_ok = false;  // |D| <= 4 ln(3) 2^level
  bool e_ok = false;  // |E| <= 13 * 2^level
  double abs_h_lo = 0;       // certified lower bound on |A+B+C+D+E|
  double max_bracket_width = 0;
};

struct TelescopeCheck {
  long step = 0;        // i = 1..level
  Rational checkpoint;  // b_{i-1} - |J^{i-1}| / (4 * 3^k)
  bool ok = false;      // |transform of w chi_[b_{i-1}, b_i)| <= 13 * 2^(level-i)
  double value_abs_hi = 0;
};

struct LevelReport {
  long level = 0;
  size_t interval_count = 0;
  size_t sampled_intervals = 0;
  size_t sample_count = 0;
  bool components_ok = false;  // all ComponentChecks passed
  bool telescope_ok = false;   // all TelescopeChecks passed
  double min_abs_h = 0;        // min over samples of the certified |H| lower bound
  Rational sigma_value;        // sigma on level tails (constant, rational)
  Rational half_measure;       // |A_l^*|
  double lower_bound_integral = 0;  // (min |H|)^2 * sigma(A_l^*)
  double max_bracket_width = 0;
  std::vector<TelescopeCheck> telescopes;  // one chain per sampled interval
};

struct LowerBoundOptions {
  int samples_per_interval = 5;     // center, +- eighth, +- quarter of the half-tail
  int max_intervals_per_level = 200;  // deterministic selection by leftmost position
  int prec_bits = 180;
  int threads = 1;
};

std::vector<LevelReport> lower_bound_report(const ConstructedWeight& cw,
                                            const LowerBoundOptions& opt = {});

}  // namespace a2lab
