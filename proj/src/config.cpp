#include "a2lab/config.hpp"

#include <thread>

#include "a2lab/float_interval.hpp"

namespace a2lab {

RunConfig RunConfig::from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig c;
  auto get = [&](const char* key) { return j.contains(key) && !j[key].is_null(); };
  if (get("k")) c.k = j["k"].get<long>();
  if (get("t")) {
    if (j["t"].is_string())
      c.t = rat_from_string(j["t"].get<std::string>());
    else
      c.t = rat(j["t"].get<long>());
  }
  if (get("nu")) c.nu = j["nu"].get<long>();
  if (get("precision")) c.precision_digits = j["precision"].get<int>();
  if (get("tol")) c.tol = j["tol"].get<double>();
  if (get("window")) c.window = j["window"].get<long>();
  if (get("scale_floor")) c.scale_floor = j["scale_floor"].get<int>();
  if (get("threads")) c.threads = j["threads"].get<int>();
  if (get("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (get("samples_per_interval"))
    c.samples_per_interval = j["samples_per_interval"].get<int>();
  if (get("max_intervals_per_level"))
    c.max_intervals_per_level = j["max_intervals_per_level"].get<int>();
  if (get("sawyer_instances")) c.sawyer_instances = j["sawyer_instances"].get<int>();
  if (get("profile_samples")) c.profile_samples = j["profile_samples"].get<int>();
  if (get("rubio_iterations")) c.rubio_iterations = j["rubio_iterations"].get<int>();
  if (get("rubio_grid")) c.rubio_grid = j["rubio_grid"].get<int>();
  if (get("k_list"))
    for (const Json& v : j["k_list"]) c.k_list.push_back(v.get<long>());
  if (get("nu_list"))
    for (const Json& v : j["nu_list"]) c.nu_list.push_back(v.get<long>());
  if (c.precision_digits < 10 || c.precision_digits > 10000)
    throw std::invalid_argument("precision must be between 10 and 10000 digits");
  if (c.tol <= 0 || c.window < 2 || c.samples_per_interval < 1)
    throw std::invalid_argument("bad tolerance, window, or sampling density");
  return c;
}

Json RunConfig::to_json() const {
  Json j;
  j["k"] = k ? Json(*k) : Json(nullptr);
  j["t"] = t ? Json(rat_to_string(*t)) : Json(nullptr);
  j["nu"] = nu ? Json(*nu) : Json(nullptr);
  j["precision"] = precision_digits;
  j["tol"] = tol;
  j["window"] = window;
  j["scale_floor"] = scale_floor;
  j["threads"] = threads;
  j["seed"] = seed;
  j["samples_per_interval"] = samples_per_interval;
  j["max_intervals_per_level"] = max_intervals_per_level;
  j["sawyer_instances"] = sawyer_instances;
  j["profile_samples"] = profile_samples;
  j["rubio_iterations"] = rubio_iterations;
  j["rubio_grid"] = rubio_grid;
  if (!k_list.empty()) j["k_list"] = k_list;
  if (!nu_list.empty()) j["nu_list"] = nu_list;
  return j;
}

WeightParams RunConfig::derive_params() const {
  if (k) return derive_params_from_k(*k, nu);
  if (t) return derive_params_from_t(*t, nu);
  throw std::invalid_argument("config needs k or t");
}

int RunConfig::effective_threads() const {
  if (threads > 0) return threads;
  const unsigned hc = std::thread::hardware_concurrency();
  return static_cast<int>(hc == 0 ? 1 : std::min(hc, 8u));
}

VerifyOptions RunConfig::verify_options() const {
  VerifyOptions o;
  o.window = window;
  o.threads = effective_threads();
  o.prec_bits = digits_to_bits(precision_digits);
  o.samples_per_interval = samples_per_interval;
  o.max_intervals_per_level = max_intervals_per_level;
  o.seed = seed;
  o.sawyer_instances = sawyer_instances;
  o.scale_floor = scale_floor;
  return o;
}

}  // namespace a2lab
