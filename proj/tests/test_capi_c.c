/* Copyright (c) 2026 abcdepth contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Compiled as C99: proves the public header is plain C and the shared
 * library drives end to end from C. */
#include <stdio.h>
#include <string.h>

#include "abcdepth/abcdepth.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "FAILED at line %d: %s\n", __LINE__, #cond);    \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

int main(void) {
  EXPECT(strcmp(abcd_version(), "0.1.0") == 0);

  const double coords[] = {0.0, 1.0, -1.0, 0.0, 1.0, 0.0};
  abcd_dataset* tri = NULL;
  EXPECT(abcd_dataset_create(coords, 3, 2, &tri) == ABCD_OK);

  abcd_options options;
  abcd_options_init(&options);
  options.artificial_count = 500;
  options.seed = 3;

  abcd_result* median = NULL;
  EXPECT(abcd_median(tri, &options, &median) == ABCD_OK);
  int64_t num = 0, den = 0;
  EXPECT(abcd_result_depth(median, &num, &den) == ABCD_OK);
  EXPECT(den == 3);
  EXPECT(num >= 1);

  char* json = NULL;
  EXPECT(abcd_result_to_json(median, &json) == ABCD_OK);
  EXPECT(strstr(json, "\"median\"") != NULL);
  abcd_string_free(json);

  /* Without extra ball centers the vertex is inside every size-2 ball, so
   * the ball approximation reports 2/3; artificial centers tighten it to
   * the exact value 1/3. */
  abcd_result* depth = NULL;
  EXPECT(abcd_depth_of_sample(tri, NULL, 0, &depth) == ABCD_OK);
  EXPECT(abcd_result_depth(depth, &num, &den) == ABCD_OK);
  EXPECT(num == 2 && den == 3);
  abcd_result_free(depth);

  depth = NULL;
  EXPECT(abcd_depth_of_sample(tri, &options, 0, &depth) == ABCD_OK);
  EXPECT(abcd_result_depth(depth, &num, &den) == ABCD_OK);
  EXPECT(num == 1 && den == 3);
  abcd_result_free(depth);

  abcd_result_free(median);
  abcd_dataset_free(tri);


  EXPECT(abcd_median(NULL, NULL, NULL) == ABCD_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(abcd_last_error_message()) > 0);

  if (failures == 0) {
    printf("ok\n");
    return 0;
  }
  fprintf(stderr, "%d check(s) failed\n", failures);
  return 1;
}
