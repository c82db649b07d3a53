#pragma once

#include <string>

#include "a2lab/json_io.hpp"
#include "a2lab/testing.hpp"
#include "a2lab/weight.hpp"

namespace a2lab {

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  bool exact = true;      // false when certified float enclosures are involved
  std::string witness;    // what failed, or a headline quantity when passing
};

struct VerifyOptions {
  long window = 3;
  int threads = 1;
  int prec_bits = 180;
  int samples_per_interval = 5;
  int max_intervals_per_level = 200;
  std::uint64_t seed = 1;
  int sawyer_instances = 100;
  int scale_floor = 0;  // 0 = derive
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed = false;
};

/// Runs every named check against a built weight. Exit-code mapping and
/// report emission live with the callers.
VerifyReport run_verify(const ConstructedWeight& cw, const VerifyOptions& opt);

Json verify_json(const VerifyReport& rep, const ConstructedWeight& cw);

/// The norms report: testing supremum bracket, transform norm quadrature,
/// per-level component table.
Json norms_json(const ConstructedWeight& cw, const VerifyOptions& opt,
                double quad_tol);

}  // namespace a2lab
