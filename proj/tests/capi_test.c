/* Exercises the C interface from plain C. */
#include "cbgon/cbgon.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  cbgon_options opts;
  cbgon_options_init(&opts);
  opts.workers = 2;

  cbgon_instance* inst = NULL;
  const char* text =
      "{\"format_version\":1,\"prime\":101,\"ambient_dim\":2,"
      "\"points\":[[1,0,1],[0,1,1],[1,1,2],[1,0,0]]}";
  EXPECT(cbgon_instance_from_json(text, CBGON_FIELD_NONE, &inst) == CBGON_OK);

  cbgon_report* rep = NULL;
  EXPECT(cbgon_cb_check(inst, 1, &opts, &rep) == CBGON_OK);
  EXPECT(cbgon_report_verdict(rep) == CBGON_REPORT);
  char* json = NULL;
  EXPECT(cbgon_report_json(rep, -1, &json) == CBGON_OK);
  EXPECT(strstr(json, "\"cb\":false") != NULL);
  EXPECT(strstr(json, "\"independent\":false") != NULL);
  cbgon_string_free(json);
  cbgon_report_free(rep);

  EXPECT(cbgon_instance_from_json(text, 7, &inst) == CBGON_INSTANCE_FORMAT);
  EXPECT(strlen(cbgon_last_error()) > 0);
  cbgon_instance_free(inst);

  cbgon_instance* bad = NULL;
  EXPECT(cbgon_instance_from_json("{\"prime\":9,\"ambient_dim\":1}", CBGON_FIELD_NONE, &bad) == CBGON_NOT_PRIME);
  EXPECT(strcmp(cbgon_status_name(CBGON_NOT_PRIME), "NotPrime") == 0);
  EXPECT(bad == NULL);

  const unsigned type[] = {4, 5};
  EXPECT(cbgon_gonality(type, 2, 0, 0, 0, 0, 0, 0, &rep) == CBGON_OK);
  EXPECT(cbgon_report_json(rep, -1, &json) == CBGON_OK);
  EXPECT(strstr(json, "\"lazarsfeld\":15") != NULL);
  EXPECT(strstr(json, "\"corb\":16") != NULL);
  cbgon_string_free(json);
  cbgon_report_free(rep);

  const unsigned wrong[] = {5, 4};
  rep = NULL;
  EXPECT(cbgon_gonality(wrong, 2, 0, 0, 0, 0, 0, 0, &rep) == CBGON_DEGREE_ORDER_VIOLATION);
  EXPECT(rep == NULL);

  const unsigned grid[] = {2, 2, 4};
  opts.has_seed = 1;
  opts.seed = 7;
  EXPECT(cbgon_cbconj_scan(101, grid, 3, 0, NULL, &opts, &rep) == CBGON_OK);
  EXPECT(cbgon_report_verdict(rep) == CBGON_PASS);
  char* txt = NULL;
  EXPECT(cbgon_report_text(rep, &txt) == CBGON_OK);
  EXPECT(strstr(txt, "verdict: PASS") != NULL);
  cbgon_string_free(txt);
  cbgon_report_free(rep);
  EXPECT(cbgon_cbconj_scan(101, grid, 3, 5, NULL, &opts, &rep) == CBGON_RANGE_VIOLATION);

  cbgon_instance* curve = NULL;
  const unsigned quintic[] = {5};
  EXPECT(cbgon_instance_random_curve(101, quintic, 1, 3, 1, &opts, &curve) == CBGON_OK);
  EXPECT(cbgon_project(curve, &opts, &rep) == CBGON_OK);
  EXPECT(cbgon_report_json(rep, -1, &json) == CBGON_OK);
  EXPECT(strstr(json, "\"projection_degree\":4") != NULL);
  cbgon_string_free(json);
  cbgon_report_free(rep);
  char* dump = NULL;
  EXPECT(cbgon_instance_to_json(curve, &dump) == CBGON_OK);
  EXPECT(strstr(dump, "\"center\"") != NULL);
  cbgon_string_free(dump);
  cbgon_instance_free(curve);

  EXPECT(cbgon_indep_check(NULL, 1, &rep) == CBGON_INVALID_ARGUMENT);
  opts.budget = 0;
  EXPECT(cbgon_verify_suite(&opts, &rep) == CBGON_INVALID_ARGUMENT);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("C API checks passed\n");
  return failures ? 1 : 0;
}
