#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "a2lab/json_io.hpp"
#include "a2lab/verify.hpp"
#include "a2lab/weight.hpp"

namespace a2lab {

/// One run's knobs. Construction parameters come from k or t (k wins when
/// both are given and consistent); everything else has conservative defaults.
struct RunConfig {
  std::optional<long> k;
  std::optional<Rational> t;
  std::optional<long> nu;
  int precision_digits = 50;
  double tol = 1e-8;
  long window = 3;
  int scale_floor = 0;       // 0 = derive from the finest gap
  int threads = 0;           // 0 = hardware concurrency, capped at 8
  std::uint64_t seed = 1;
  int samples_per_interval = 5;
  int max_intervals_per_level = 200;
  int sawyer_instances = 100;
  int profile_samples = 240;
  int rubio_iterations = 4;
  int rubio_grid = 192;
  std::vector<long> k_list;   // scaling sweeps
  std::vector<long> nu_list;  // parallel to k_list; -1 = full depth

  static RunConfig from_json_text(const std::string& text);
  Json to_json() const;

  WeightParams derive_params() const;  // throws when neither k nor t is given
  VerifyOptions verify_options() const;
  int effective_threads() const;
};

}  // namespace a2lab
