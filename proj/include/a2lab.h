#ifndef A2LAB_H
#define A2LAB_H

/* C interface to the extremal-weight laboratory. All heavy objects stay
 * behind the opaque weight handle; reports cross the boundary as JSON or CSV
 * strings allocated by the library and released with a2lab_string_free.
 * Configs are JSON objects; unknown keys are ignored. Functions return
 * A2LAB_OK on success and fill *errmsg (malloc'ed, caller frees with
 * a2lab_string_free) otherwise. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct a2lab_weight a2lab_weight;

typedef enum {
  A2LAB_OK = 0,
  A2LAB_CHECK_FAILED = 1,
  A2LAB_BAD_CONFIG = 2,
  A2LAB_RUNTIME_ERROR = 3
} a2lab_status;

const char* a2lab_version(void);

void a2lab_string_free(char* s);

/* Derived construction parameters for a config with "k" or "t". */
a2lab_status a2lab_params_json(const char* config_json, char** out,
                               char** errmsg);

/* Builds the weight described by the config. */
a2lab_status a2lab_weight_build(const char* config_json, a2lab_weight** out,
                                char** errmsg);
void a2lab_weight_free(a2lab_weight* w);

/* Full serialization; parsing it back yields an identical handle. */
a2lab_status a2lab_weight_json(const a2lab_weight* w, char** out, char** errmsg);
a2lab_status a2lab_weight_parse(const char* weight_json, a2lab_weight** out,
                                char** errmsg);

/* Runs every named check. *all_passed is 1 iff the report is clean; the
 * status stays A2LAB_OK when checks ran but failed. */
a2lab_status a2lab_verify(const a2lab_weight* w, const char* config_json,
                          char** report_json, int* all_passed, char** errmsg);

/* Testing supremum, norm bracket, quadrature, per-level component table. */
a2lab_status a2lab_norms(const a2lab_weight* w, const char* config_json,
                         char** report_json, char** errmsg);

/* CSV of transform samples over one period. */
a2lab_status a2lab_hilbert_profile(const a2lab_weight* w,
                                   const char* config_json, char** csv,
                                   char** errmsg);

/* CSV sweep over (k, nu) pairs from the config lists. */
a2lab_status a2lab_scaling(const char* config_json, char** csv, char** errmsg);

/* Stopping-time verifier on a seeded random instance. */
a2lab_status a2lab_sawyer_demo(const char* config_json, char** json,
                               char** errmsg);

#ifdef __cplusplus
}
#endif

#endif /* A2LAB_H */
