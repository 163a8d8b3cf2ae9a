/* C interface to the cbgon toolkit. All handles are opaque; every function
 * returning cbgon_status leaves a message retrievable with
 * cbgon_last_error() on failure (thread-local). */
#ifndef CBGON_H
#define CBGON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#pragma GCC visibility push(default)
#endif

typedef enum cbgon_status {
  CBGON_OK = 0,
  CBGON_INVALID_ARGUMENT,
  CBGON_NOT_PRIME,
  CBGON_ZERO_INVERSE,
  CBGON_FIELD_MISMATCH,
  CBGON_SYNTAX_ERROR,
  CBGON_NOT_HOMOGENEOUS,
  CBGON_WRONG_VARIABLE,
  CBGON_BUDGET_EXCEEDED,
  CBGON_POINT_NOT_ON_SCHEME,
  CBGON_DEGENERATE_CONFIGURATION,
  CBGON_NON_REDUCED_SUBSCHEME,
  CBGON_NEGATIVE_CANONICAL_TWIST,
  CBGON_POINT_NOT_ON_CURVE,
  CBGON_NON_REDUCED_CENTER_INTERSECTION,
  CBGON_SINGULAR_AT_CENTER,
  CBGON_DEGREE_ORDER_VIOLATION,
  CBGON_RANGE_VIOLATION,
  CBGON_RETRY_LIMIT,
  CBGON_INSTANCE_FORMAT,
  CBGON_INTERNAL_ERROR
} cbgon_status;

typedef enum cbgon_verdict { CBGON_PASS = 0, CBGON_FAIL = 1, CBGON_REPORT = 2 } cbgon_verdict;

typedef struct cbgon_instance cbgon_instance;
typedef struct cbgon_report cbgon_report;

/* Fields are passed as a prime p, or CBGON_FIELD_RATIONAL for QQ. */
typedef struct cbgon_options {
  uint64_t seed;
  int has_seed;
  uint64_t budget;
  unsigned workers;
} cbgon_options;

void cbgon_options_init(cbgon_options* options);

const char* cbgon_last_error(void);
const char* cbgon_status_name(cbgon_status status);

/* override_prime: 0 keeps the file's field, CBGON_FIELD_RATIONAL forces QQ,
 * anything else forces GF(p). A forced field must agree with the file. */
#define CBGON_FIELD_NONE 0u
#define CBGON_FIELD_RATIONAL UINT32_MAX
cbgon_status cbgon_instance_from_json(const char* text, uint32_t override_prime, cbgon_instance** out);
cbgon_status cbgon_instance_load(const char* path, uint32_t override_prime, cbgon_instance** out);
/* Seeded random smooth curve of the given type; with_center adds a chord center. */
cbgon_status cbgon_instance_random_curve(uint32_t prime, const unsigned* degrees, size_t count, uint64_t seed,
                                         int with_center, const cbgon_options* options, cbgon_instance** out);
/* Seeded curve through a planted (2n-2)-secant (n-2)-plane; the planted points become the instance points. */
cbgon_status cbgon_instance_planted_curve(uint32_t prime, const unsigned* degrees, size_t count, uint64_t seed,
                                          const cbgon_options* options, cbgon_instance** out);
/* Caller frees the returned string with cbgon_string_free. */
cbgon_status cbgon_instance_to_json(const cbgon_instance* instance, char** out);
void cbgon_instance_free(cbgon_instance* instance);

cbgon_status cbgon_indep_check(const cbgon_instance* instance, long long degree, cbgon_report** out);
cbgon_status cbgon_cb_check(const cbgon_instance* instance, long long degree, const cbgon_options* options,
                            cbgon_report** out);
cbgon_status cbgon_cb_canonical(const cbgon_instance* instance, const cbgon_options* options, cbgon_report** out);
cbgon_status cbgon_project(const cbgon_instance* instance, const cbgon_options* options, cbgon_report** out);
cbgon_status cbgon_fibers(const cbgon_instance* instance, const cbgon_options* options, cbgon_report** out);
cbgon_status cbgon_secant_census(const cbgon_instance* instance, size_t k, const cbgon_options* options,
                                 cbgon_report** out);
cbgon_status cbgon_gamma(const cbgon_instance* instance, const cbgon_options* options, cbgon_report** out);
/* Optional arguments are ignored when the matching has_ flag is 0. */
cbgon_status cbgon_gonality(const unsigned* degrees, size_t count, int has_gamma, long long gamma, int has_deg_s,
                            long long deg_s, int has_alpha, long long alpha, cbgon_report** out);
cbgon_status cbgon_dim_audit(const unsigned* degrees, size_t count, cbgon_report** out);
/* points may be NULL: a seeded random grid of the given type is scanned. */
cbgon_status cbgon_cbconj_scan(uint32_t prime, const unsigned* grid, size_t count, unsigned e,
                               const cbgon_instance* points, const cbgon_options* options, cbgon_report** out);
cbgon_status cbgon_verify_suite(const cbgon_options* options, cbgon_report** out);

cbgon_verdict cbgon_report_verdict(const cbgon_report* report);
/* indent < 0 gives compact JSON. Caller frees with cbgon_string_free. */
cbgon_status cbgon_report_json(const cbgon_report* report, int indent, char** out);
cbgon_status cbgon_report_text(const cbgon_report* report, char** out);
void cbgon_report_free(cbgon_report* report);
void cbgon_string_free(char* text);

#if defined(__GNUC__)
#pragma GCC visibility pop
#endif

#ifdef __cplusplus
}
#endif

#endif
