#pragma once

#include "a2lab/config.hpp"

namespace a2lab {

/// One CSV row per feasible (k, nu); infeasible pairs are skipped with a note
/// appended to `log`.
std::string scaling_csv(const RunConfig& cfg, std::string* log);

/// Transform samples on an equispaced breakpoint-avoiding grid:
/// x, value, error_bound, region_tag, level.
std::string profile_csv(const ConstructedWeight& cw, const RunConfig& cfg);

/// Stopping-time verifier on a seeded random instance.
Json sawyer_demo_json(const RunConfig& cfg);

}  // namespace a2lab
