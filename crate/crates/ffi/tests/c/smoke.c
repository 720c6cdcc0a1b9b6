#include <stdio.h>
#include <string.h>

#include "pdom.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond); \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  PdomParts *parts = NULL;
  CHECK(pdom_parts_parse("2,2,10,17", &parts) == PDOM_STATUS_OK);

  PdomResult *res = NULL;
  CHECK(pdom_compute(parts, 14, &res) == PDOM_STATUS_OK);
  PdomSummary s;
  CHECK(pdom_result_summary(res, &s) == PDOM_STATUS_OK);
  CHECK(s.gamma == 14 && s.case_ == PDOM_CASE_FULL_PARTS);
  CHECK(s.s2_kind == PDOM_DEMAND_KIND_FINITE && s.s2 == 2);

  uint64_t counts[4];
  size_t len = 0;
  CHECK(pdom_result_witness_counts(res, counts, 4, &len) == PDOM_STATUS_OK);
  CHECK(len == 4 && counts[0] + counts[1] + counts[2] + counts[3] == 14);
  pdom_result_free(res);

  PdomGraph *g = NULL;
  CHECK(pdom_graph_from_parts(parts, NULL, &g) == PDOM_STATUS_OK);
  size_t ids[14];
  for (size_t i = 0; i < 14; i++) ids[i] = i;
  bool ok = false;
  CHECK(pdom_is_p_dominating(g, ids, 14, 14, &ok) == PDOM_STATUS_OK && ok);
  pdom_graph_free(g);

  CHECK(pdom_compute(parts, 0, &res) == PDOM_STATUS_INVALID_ARGUMENT);
  CHECK(pdom_last_error() != NULL && strstr(pdom_last_error(), "p must be") != NULL);
  pdom_parts_free(parts);

  printf("c smoke ok\n");
  return 0;
}
