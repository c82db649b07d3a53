#pragma once

#include "a2lab/lattice.hpp"
#include "a2lab/weight.hpp"

namespace a2lab {

/// Exact testing value of one pair J for a positive 1-periodic step weight:
/// (1/w(J)) * integral over J of (per-piece sup of M(w chi_J))^2 * w^-1.
/// Equals exactly 1 whenever w is constant on J.
QuadScalar testing_value(const PeriodicFn& w, const JPair& j);

struct ScaleMax {
  int depth_m = 0;  // |J| = 2 * 3^-m
  QuadScalar max_value;
  JPair argmax;
  size_t evaluated = 0;
  size_t skipped_constant = 0;
};

struct TrialBound {
  JPair trial;
  QuadScalar ratio_sq;  // ||minorant of M(sigma chi_J)||^2 / ||sigma chi_J||^2
};

struct TestingReport {
  std::vector<ScaleMax> per_scale;                  // m = 1 .. scale_floor
  std::vector<std::pair<long, QuadScalar>> coarse;  // |J| in {2, 6, 18}
  QuadScalar measured_sup;  // max over every exactly evaluated pair
  JPair argmax;
  QuadScalar coarse_certificate;  // 25 * integral of scaffold^2 sigma; |J| >= 1
  QuadScalar fine_cap;      // max squared adjacent-value ratio; scales below floor
  QuadScalar certified_sup; // max over the three regimes
  int scale_floor = 0;
  double m_upper = 0;       // 24 sqrt(certified_sup), rounded up
  double m_lower = 0;       // best trial lower bound, rounded down
  TrialBound best_trial;
};

struct TestingOptions {
  int scale_floor = 0;  // 0: derive from the finest breakpoint gap
  int threads = 1;
  int prec_bits = 64;
};

TestingReport testing_constant(const ConstructedWeight& cw,
                               const TestingOptions& opt = {});

/// Rayleigh-quotient lower bound for ||M|| on L2(sigma) from the trial
/// function sigma chi_J, using prefix/suffix covering averages as a
/// pointwise-valid minorant of the maximal function.
TrialBound testing_trial_lower(const ConstructedWeight& cw, const JPair& trial);

}  // namespace a2lab
