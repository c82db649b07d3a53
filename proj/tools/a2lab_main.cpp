// Command-line front end. Links only the C API; all outputs are the
// library's JSON/CSV strings, written to --out or stdout.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "a2lab.h"

namespace {

struct Flags {
  std::optional<long> k;
  std::optional<std::string> t;
  std::optional<long> nu;
  int precision = 50;
  double tol = 1e-8;
  long window = 3;
  int scale_floor = 0;
  int threads = 0;
  unsigned long long seed = 1;
  int samples = 5;
  int max_intervals = 200;
  int instances = 100;
  int profile_samples = 240;
  std::vector<long> k_list;
  std::vector<long> nu_list;
  std::string out;
};

std::string make_config(const Flags& f) {
  nlohmann::json j;
  if (f.k) j["k"] = *f.k;
  if (f.t) j["t"] = *f.t;
  if (f.nu) j["nu"] = *f.nu;
  j["precision"] = f.precision;
  j["tol"] = f.tol;
  j["window"] = f.window;
  j["scale_floor"] = f.scale_floor;
  j["threads"] = f.threads;
  j["seed"] = f.seed;
  j["samples_per_interval"] = f.samples;
  j["max_intervals_per_level"] = f.max_intervals;
  j["sawyer_instances"] = f.instances;
  j["profile_samples"] = f.profile_samples;
  if (!f.k_list.empty()) j["k_list"] = f.k_list;
  if (!f.nu_list.empty()) j["nu_list"] = f.nu_list;
  return j.dump();
}

int write_output(const Flags& f, const char* text) {
  if (f.out.empty()) {
    std::fputs(text, stdout);
    return 0;
  }
  std::ofstream os(f.out, std::ios::binary);
  if (!os) {
    std::cerr << "cannot open output file: " << f.out << "\n";
    return 1;
  }
  os << text;
  return 0;
}

int fail(a2lab_status st, char* errmsg) {
  std::cerr << "error: " << (errmsg ? errmsg : "unknown") << "\n";
  a2lab_string_free(errmsg);
  return st == A2LAB_BAD_CONFIG ? 2 : 1;
}

struct WeightHandle {
  a2lab_weight* w = nullptr;
  ~WeightHandle() { a2lab_weight_free(w); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal weight laboratory: build the recursive weight, "
               "evaluate its operators, verify the estimates"};
  app.require_subcommand(1);

  Flags f;
  app.add_option("--k", f.k, "construction order (>= 2)")->envname("A2LAB_K");
  app.add_option("--t", f.t, "scale target t >= 1 (rational, e.g. 10 or 27/2)")
      ->envname("A2LAB_T");
  app.add_option("--nu", f.nu, "recursion depth (default: full depth 3^(k-1))")
      ->envname("A2LAB_NU");
  app.add_option("--precision", f.precision, "working precision in decimal digits")
      ->envname("A2LAB_PRECISION");
  app.add_option("--tol", f.tol, "quadrature relative tolerance")
      ->envname("A2LAB_TOL");
  app.add_option("--window", f.window, "periodic evaluation window in periods")
      ->envname("A2LAB_WINDOW");
  app.add_option("--scale-floor", f.scale_floor,
                 "finest enumerated testing scale (0 = derive)")
      ->envname("A2LAB_SCALE_FLOOR");
  app.add_option("--threads", f.threads, "worker threads (0 = hardware)")
      ->envname("A2LAB_THREADS");
  app.add_option("--seed", f.seed, "seed for randomized checks")
      ->envname("A2LAB_SEED");
  app.add_option("--samples", f.samples, "samples per half-tail interval")
      ->envname("A2LAB_SAMPLES");
  app.add_option("--max-intervals", f.max_intervals,
                 "interval cap per level in the component report")
      ->envname("A2LAB_MAX_INTERVALS");
  app.add_option("--instances", f.instances, "random stopping-time instances")
      ->envname("A2LAB_INSTANCES");
  app.add_option("--out", f.out, "output path (default: stdout)")
      ->envname("A2LAB_OUT");

  auto* cmd_params = app.add_subcommand("params", "derived construction parameters");
  auto* cmd_build = app.add_subcommand("build", "emit the full weight as JSON");
  auto* cmd_verify = app.add_subcommand("verify", "run every named check");
  auto* cmd_norms = app.add_subcommand(
      "norms", "testing supremum, norm bracket, transform quadrature");
  auto* cmd_scaling = app.add_subcommand("scaling", "CSV sweep over (k, nu) pairs");
  cmd_scaling->add_option("--k-list", f.k_list, "orders to sweep")
      ->delimiter(',');
  cmd_scaling->add_option("--nu-list", f.nu_list,
                          "depths parallel to --k-list (-1 = full)")
      ->delimiter(',');
  auto* cmd_profile = app.add_subcommand(
      "hilbert-profile", "CSV transform samples over one period");
  cmd_profile->add_option("--profile-samples", f.profile_samples,
                          "number of grid samples")
      ->envname("A2LAB_PROFILE_SAMPLES");
  auto* cmd_sawyer = app.add_subcommand(
      "sawyer-demo", "stopping-time verifier on a seeded random instance");

  for (CLI::App* sub : {cmd_params, cmd_build, cmd_verify, cmd_norms,
                        cmd_scaling, cmd_profile, cmd_sawyer})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  const std::string config = make_config(f);
  char* errmsg = nullptr;
  char* text = nullptr;

  if (cmd_params->parsed()) {
    if (a2lab_status st = a2lab_params_json(config.c_str(), &text, &errmsg))
      return fail(st, errmsg);
  } else if (cmd_scaling->parsed()) {
    if (a2lab_status st = a2lab_scaling(config.c_str(), &text, &errmsg))
      return fail(st, errmsg);
  } else if (cmd_sawyer->parsed()) {
    if (a2lab_status st = a2lab_sawyer_demo(config.c_str(), &text, &errmsg))
      return fail(st, errmsg);
  } else {
    WeightHandle h;
    if (a2lab_status st = a2lab_weight_build(config.c_str(), &h.w, &errmsg))
      return fail(st, errmsg);
    if (cmd_build->parsed()) {
      if (a2lab_status st = a2lab_weight_json(h.w, &text, &errmsg))
        return fail(st, errmsg);
    } else if (cmd_verify->parsed()) {
      int all_passed = 0;
      if (a2lab_status st =
              a2lab_verify(h.w, config.c_str(), &text, &all_passed, &errmsg))
        return fail(st, errmsg);
      const int rc = write_output(f, text);
      a2lab_string_free(text);
      if (rc) return rc;
      if (!all_passed) {
        std::cerr << "verification FAILED\n";
        return 1;
      }
      return 0;
    } else if (cmd_norms->parsed()) {
      if (a2lab_status st = a2lab_norms(h.w, config.c_str(), &text, &errmsg))
        return fail(st, errmsg);
    } else if (cmd_profile->parsed()) {
      if (a2lab_status st =
              a2lab_hilbert_profile(h.w, config.c_str(), &text, &errmsg))
        return fail(st, errmsg);
    }
  }

  const int rc = write_output(f, text);
  a2lab_string_free(text);
  return rc;
}
