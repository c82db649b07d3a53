#include "a2lab.h"

#include <cstring>
#include <string>

#include "a2lab/config.hpp"
#include "a2lab/reports.hpp"
#include "a2lab/verify.hpp"

struct a2lab_weight {
  a2lab::ConstructedWeight cw;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** errmsg, const std::string& what) {
  if (errmsg) *errmsg = dup_string(what);
}

template <class Fn>
a2lab_status guarded(char** errmsg, Fn&& fn) {
  try {
    fn();
    return A2LAB_OK;
  } catch (const std::invalid_argument& e) {
    set_err(errmsg, e.what());
    return A2LAB_BAD_CONFIG;
  } catch (const std::out_of_range& e) {
    set_err(errmsg, e.what());
    return A2LAB_BAD_CONFIG;
  } catch (const std::exception& e) {
    set_err(errmsg, e.what());
    return A2LAB_RUNTIME_ERROR;
  }
}

a2lab::RunConfig parse_config(const char* config_json) {
  return a2lab::RunConfig::from_json_text(config_json ? config_json : "{}");
}

}  // namespace

extern "C" {

const char* a2lab_version(void) { return "1.0.0"; }

void a2lab_string_free(char* s) { std::free(s); }

a2lab_status a2lab_params_json(const char* config_json, char** out,
                               char** errmsg) {
  return guarded(errmsg, [&] {
    const a2lab::RunConfig cfg = parse_config(config_json);
    *out = dup_string(a2lab::dump(a2lab::params_json(cfg.derive_params())));
  });
}

a2lab_status a2lab_weight_build(const char* config_json, a2lab_weight** out,
                                char** errmsg) {
  return guarded(errmsg, [&] {
    const a2lab::RunConfig cfg = parse_config(config_json);
    *out = new a2lab_weight{a2lab::build_weight(cfg.derive_params())};
  });
}

void a2lab_weight_free(a2lab_weight* w) { delete w; }

a2lab_status a2lab_weight_json(const a2lab_weight* w, char** out,
                               char** errmsg) {
  return guarded(errmsg, [&] {
    if (!w) throw std::invalid_argument("null weight handle");
    *out = dup_string(a2lab::dump(a2lab::weight_json(w->cw)));
  });
}

a2lab_status a2lab_weight_parse(const char* weight_json, a2lab_weight** out,
                                char** errmsg) {
  return guarded(errmsg, [&] {
    if (!weight_json) throw std::invalid_argument("null weight text");
    *out = new a2lab_weight{
        a2lab::weight_from_json(a2lab::Json::parse(weight_json))};
  });
}

a2lab_status a2lab_verify(const a2lab_weight* w, const char* config_json,
                          char** report_json, int* all_passed, char** errmsg) {
  return guarded(errmsg, [&] {
    if (!w) throw std::invalid_argument("null weight handle");
    const a2lab::RunConfig cfg = parse_config(config_json);
    const a2lab::VerifyReport rep = a2lab::run_verify(w->cw, cfg.verify_options());
    if (report_json)
      *report_json = dup_string(a2lab::dump(a2lab::verify_json(rep, w->cw)));
    if (all_passed) *all_passed = rep.all_passed ? 1 : 0;
  });
}

a2lab_status a2lab_norms(const a2lab_weight* w, const char* config_json,
                         char** report_json, char** errmsg) {
  return guarded(errmsg, [&] {
    if (!w) throw std::invalid_argument("null weight handle");
    const a2lab::RunConfig cfg = parse_config(config_json);
    *report_json = dup_string(
        a2lab::dump(a2lab::norms_json(w->cw, cfg.verify_options(), cfg.tol)));
  });
}

a2lab_status a2lab_hilbert_profile(const a2lab_weight* w,
                                   const char* config_json, char** csv,
                                   char** errmsg) {
  return guarded(errmsg, [&] {
    if (!w) throw std::invalid_argument("null weight handle");
    const a2lab::RunConfig cfg = parse_config(config_json);
    *csv = dup_string(a2lab::profile_csv(w->cw, cfg));
  });
}

a2lab_status a2lab_scaling(const char* config_json, char** csv, char** errmsg) {
  return guarded(errmsg, [&] {
    const a2lab::RunConfig cfg = parse_config(config_json);
    std::string log;
    std::string out = a2lab::scaling_csv(cfg, &log);
    if (!log.empty()) out += "# " + log;
    *csv = dup_string(out);
  });
}

a2lab_status a2lab_sawyer_demo(const char* config_json, char** json,
                               char** errmsg) {
  return guarded(errmsg, [&] {
    const a2lab::RunConfig cfg = parse_config(config_json);
    *json = dup_string(a2lab::dump(a2lab::sawyer_demo_json(cfg)));
  });
}

}  // extern "C"
