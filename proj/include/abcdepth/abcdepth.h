/* Copyright (c) 2026 abcdepth contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the abcdepth library. All functions that can fail return an
 * abcd_status; ABCD_OK means the out-parameters were written. On failure a
 * thread-local message is available via abcd_last_error_message(). Objects
 * returned through abcd_dataset/abcd_result handles must be released with the
 * matching *_free. Strings returned through char** out-parameters are
 * heap-allocated and must be released with abcd_string_free.
 *
 * Indices at this interface are 0-based. Serialized JSON/CSV documents use
 * 1-based indices (matching input row numbering); see README.
 */
#ifndef ABCDEPTH_H
#define ABCDEPTH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum abcd_status {
  ABCD_OK = 0,
  ABCD_ERR_INVALID_ARGUMENT = 1,
  ABCD_ERR_DIMENSION_MISMATCH = 2,
  ABCD_ERR_PARSE = 3,
  ABCD_ERR_IO = 4,
  ABCD_ERR_UNSUPPORTED = 5,
  ABCD_ERR_COST_GUARD = 6,
  ABCD_ERR_INTERNAL = 7
} abcd_status;

typedef enum abcd_result_kind {
  ABCD_RESULT_MEDIAN = 0,
  ABCD_RESULT_DEPTH = 1,
  ABCD_RESULT_LEVEL_SETS = 2,
  ABCD_RESULT_CONTOUR = 3
} abcd_result_kind;

typedef struct abcd_dataset abcd_dataset;
typedef struct abcd_result abcd_result;

typedef struct abcd_options {
  size_t artificial_count; /* artificial points added as candidates and centers */
  uint64_t seed;
  double margin;           /* bounding-box margin as a fraction of each axis range */
} abcd_options;

/* Fills in the defaults: no artificial points, seed 0, margin 0.1. */
void abcd_options_init(abcd_options* options);

const char* abcd_version(void);
const char* abcd_status_name(abcd_status status);
/* Message from the most recent failing call on this thread; never NULL. */
const char* abcd_last_error_message(void);
void abcd_string_free(char* text);

/* ---- datasets ---- */

/* coords is row-major: n points of dim doubles each. */
abcd_status abcd_dataset_create(const double* coords, size_t n, size_t dim, abcd_dataset** out);
abcd_status abcd_dataset_from_csv_file(const char* path, abcd_dataset** out);
abcd_status abcd_dataset_from_csv_text(const char* text, abcd_dataset** out);
/* distribution: "normal" (any dim), "ring" (dim 2; annulus radii inner < outer,
 * pass 0,0 for the defaults 1,2), "triangle" (the fixed 3-point set). */
abcd_status abcd_dataset_generate(const char* distribution, size_t n, size_t dim, uint64_t seed,
                                  double ring_inner, double ring_outer, abcd_dataset** out);
size_t abcd_dataset_size(const abcd_dataset* dataset);
size_t abcd_dataset_dim(const abcd_dataset* dataset);
/* Writes dim doubles into out_coords. */
abcd_status abcd_dataset_point(const abcd_dataset* dataset, size_t index, double* out_coords);
abcd_status abcd_dataset_to_csv(const abcd_dataset* dataset, char** out_text);
/* Sample plus freshly drawn artificial points, with a 0/1 artificial column. */
abcd_status abcd_dataset_augmented_csv(const abcd_dataset* dataset, const abcd_options* options,
                                       char** out_text);
void abcd_dataset_free(abcd_dataset* dataset);

/* ---- computations ---- */

abcd_status abcd_median(const abcd_dataset* dataset, const abcd_options* options,
                        abcd_result** out);
abcd_status abcd_level_sets(const abcd_dataset* dataset, const abcd_options* options,
                            abcd_result** out);
/* Convex contour of the deepest level; dataset must be 2-D. */
abcd_status abcd_contour(const abcd_dataset* dataset, const abcd_options* options,
                         abcd_result** out);
abcd_status abcd_depth_of_sample(const abcd_dataset* dataset, const abcd_options* options,
                                 size_t index, abcd_result** out);
abcd_status abcd_depth_of_point(const abcd_dataset* dataset, const abcd_options* options,
                                const double* x, size_t dim, abcd_result** out);
/* Depth numerators of every sample point over one shared ball system; writes
 * n entries into out_numerators and the common denominator (n) once. */
abcd_status abcd_depths_of_all_samples(const abcd_dataset* dataset, const abcd_options* options,
                                       int64_t* out_numerators, int64_t* out_denominator);

/* ---- result accessors ---- */

abcd_result_kind abcd_result_get_kind(const abcd_result* result);
/* Median and depth results: the reported depth fraction. */
abcd_status abcd_result_depth(const abcd_result* result, int64_t* out_num, int64_t* out_den);
abcd_status abcd_result_iterations(const abcd_result* result, size_t* out);
/* Depth results only: ball size at early exit, 0 when no ball excluded the point. */
abcd_status abcd_result_exit_ball_size(const abcd_result* result, int64_t* out);
abcd_status abcd_result_median_size(const abcd_result* result, size_t* out);
/* i-th median member: its coordinates, 0-based candidate index, and whether
 * it is an artificial point. Null out-pointers are allowed and skipped. */
abcd_status abcd_result_median_point(const abcd_result* result, size_t i, double* out_coords,
                                     size_t* out_index, int* out_artificial);
abcd_status abcd_result_level_count(const abcd_result* result, size_t* out);
abcd_status abcd_result_level_info(const abcd_result* result, size_t level, int64_t* out_alpha_num,
                                   int64_t* out_alpha_den, int64_t* out_ball_size,
                                   size_t* out_member_count);
abcd_status abcd_result_contour_size(const abcd_result* result, size_t* out);
abcd_status abcd_result_contour_vertex(const abcd_result* result, size_t i, double* out_xy);
abcd_status abcd_result_elapsed_seconds(const abcd_result* result, double* out);
abcd_status abcd_result_to_json(const abcd_result* result, char** out_text);
abcd_status abcd_result_to_csv(const abcd_result* result, char** out_text);
void abcd_result_free(abcd_result* result);

/* ---- reference computations ---- */

abcd_status abcd_exact_depth_1d(const double* values, size_t n, double x, int64_t* out_num,
                                int64_t* out_den);
abcd_status abcd_exact_depth_2d(const abcd_dataset* dataset, const double* xy, int64_t* out_num,
                                int64_t* out_den);
/* Exact depth for dim <= 3, n <= 25; larger instances are rejected. */
abcd_status abcd_exact_depth_small(const abcd_dataset* dataset, const double* x, size_t dim,
                                   int64_t* out_num, int64_t* out_den);
/* Upper bound from direction_count sampled unit directions. */
abcd_status abcd_direction_upper_bound(const abcd_dataset* dataset, const double* x, size_t dim,
                                       size_t direction_count, uint64_t seed, int64_t* out_num,
                                       int64_t* out_den);
abcd_status abcd_chi_square_cdf(double x, int dof, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ABCDEPTH_H */
