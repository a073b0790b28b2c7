// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#include "abcdepth/abcdepth.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "abcdepth/augment.hpp"
#include "abcdepth/ball_system.hpp"
#include "abcdepth/dataset.hpp"
#include "abcdepth/distance_table.hpp"
#include "abcdepth/engine.hpp"
#include "abcdepth/error.hpp"
#include "abcdepth/hull.hpp"
#include "abcdepth/io.hpp"
#include "abcdepth/oracle.hpp"
#include "abcdepth/special.hpp"
#include "abcdepth/synth.hpp"
#include "abcdepth/version.hpp"

struct abcd_dataset {
  abcdepth::DataSet data;
};

struct abcd_result {
  abcd_result_kind kind;
  abcdepth::ResultDocument doc;
};

namespace {

thread_local std::string t_last_error;

abcd_status map_errc(abcdepth::Errc code) {
  switch (code) {
    case abcdepth::Errc::invalid_argument: return ABCD_ERR_INVALID_ARGUMENT;
    case abcdepth::Errc::dimension_mismatch: return ABCD_ERR_DIMENSION_MISMATCH;
    case abcdepth::Errc::parse: return ABCD_ERR_PARSE;
    case abcdepth::Errc::io: return ABCD_ERR_IO;
    case abcdepth::Errc::unsupported: return ABCD_ERR_UNSUPPORTED;
    case abcdepth::Errc::cost_guard: return ABCD_ERR_COST_GUARD;
    case abcdepth::Errc::internal: return ABCD_ERR_INTERNAL;
  }
  return ABCD_ERR_INTERNAL;
}

template <typename F>
abcd_status guarded(F&& body) {
  try {
    return body();
  } catch (const abcdepth::Error& e) {
    t_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return ABCD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return ABCD_ERR_INTERNAL;
  }
}

abcd_status arg_error(const char* message) {
  t_last_error = message;
  return ABCD_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

abcdepth::EngineOptions engine_options(const abcd_options* options) {
  abcdepth::EngineOptions eo;
  if (options) {
    eo.artificial_count = options->artificial_count;
    eo.seed = options->seed;
    eo.margin = options->margin;
  }
  return eo;
}

abcdepth::RunMeta make_meta(const char* command, const abcdepth::DataSet& data,
                            const abcdepth::EngineOptions& eo, double elapsed) {
  abcdepth::RunMeta meta;
  meta.command = command;
  meta.n = data.size();
  meta.d = data.dim();
  meta.artificial = eo.artificial_count;
  meta.seed = eo.seed;
  meta.margin = eo.margin;
  meta.elapsed_seconds = elapsed;
  return meta;
}

// Sample-plus-artificial ball system for the depth loops, honoring the
// convention that artificial points act as extra centers.
abcdepth::BallSystem depth_system(const abcdepth::DataSet& data,
                                  const abcdepth::EngineOptions& eo) {
  const abcdepth::TriangularDistanceTable table = abcdepth::build_distance_table(data);
  if (eo.artificial_count == 0) {
    return abcdepth::build_ball_system(data, table);
  }
  const abcdepth::AugmentedDataSet augmented =
      abcdepth::augment(data, eo.artificial_count, eo.seed, abcdepth::bounding_domain(data, eo.margin));
  const auto artificial = augmented.artificial_points();
  return abcdepth::build_ball_system(data, table, artificial ? &*artificial : nullptr);
}

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

abcd_status finish_result(abcd_result_kind kind, abcdepth::ResultDocument doc, abcd_result** out) {
  *out = new abcd_result{kind, std::move(doc)};
  return ABCD_OK;
}

} // namespace

extern "C" {

void abcd_options_init(abcd_options* options) {
  if (!options) return;
  options->artificial_count = 0;
  options->seed = 0;
  options->margin = abcdepth::kDefaultDomainMargin;
}

const char* abcd_version(void) { return abcdepth::kVersion; }

const char* abcd_status_name(abcd_status status) {
  switch (status) {
    case ABCD_OK: return "ok";
    case ABCD_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ABCD_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case ABCD_ERR_PARSE: return "parse_error";
    case ABCD_ERR_IO: return "io_error";
    case ABCD_ERR_UNSUPPORTED: return "unsupported";
    case ABCD_ERR_COST_GUARD: return "cost_guard";
    case ABCD_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* abcd_last_error_message(void) { return t_last_error.c_str(); }

void abcd_string_free(char* text) { std::free(text); }

abcd_status abcd_dataset_create(const double* coords, size_t n, size_t dim, abcd_dataset** out) {
  if (!out) return arg_error("out pointer is null");
  if (!coords) return arg_error("coords pointer is null");
  return guarded([&] {
    std::vector<double> flat(coords, coords + n * dim);
    *out = new abcd_dataset{abcdepth::DataSet(std::move(flat), dim)};
    return ABCD_OK;
  });
}

abcd_status abcd_dataset_from_csv_file(const char* path, abcd_dataset** out) {
  if (!out) return arg_error("out pointer is null");
  if (!path) return arg_error("path is null");
  return guarded([&] {
    *out = new abcd_dataset{abcdepth::read_points_csv_file(path)};
    return ABCD_OK;
  });
}

abcd_status abcd_dataset_from_csv_text(const char* text, abcd_dataset** out) {
  if (!out) return arg_error("out pointer is null");
  if (!text) return arg_error("text is null");
  return guarded([&] {
    *out = new abcd_dataset{abcdepth::read_points_csv_text(text)};
    return ABCD_OK;
  });
}

abcd_status abcd_dataset_generate(const char* distribution, size_t n, size_t dim, uint64_t seed,
                                  double ring_inner, double ring_outer, abcd_dataset** out) {
  if (!out) return arg_error("out pointer is null");
  if (!distribution) return arg_error("distribution is null");
  return guarded([&] {
    abcdepth::GeneratorSpec spec;
    spec.kind = abcdepth::distribution_from_name(distribution);
    spec.n = n;
    spec.d = dim;
    spec.seed = seed;
    if (ring_inner != 0.0 || ring_outer != 0.0) {
      spec.ring_inner = ring_inner;
      spec.ring_outer = ring_outer;
    }
    *out = new abcd_dataset{abcdepth::generate(spec)};
    return ABCD_OK;
  });
}

size_t abcd_dataset_size(const abcd_dataset* dataset) { return dataset ? dataset->data.size() : 0; }

size_t abcd_dataset_dim(const abcd_dataset* dataset) { return dataset ? dataset->data.dim() : 0; }

abcd_status abcd_dataset_point(const abcd_dataset* dataset, size_t index, double* out_coords) {
  if (!dataset) return arg_error("dataset is null");
  if (!out_coords) return arg_error("out_coords is null");
  return guarded([&] {
    const auto p = dataset->data.point(index);
    std::memcpy(out_coords, p.data(), p.size() * sizeof(double));
    return ABCD_OK;
  });
}

abcd_status abcd_dataset_to_csv(const abcd_dataset* dataset, char** out_text) {
  if (!dataset) return arg_error("dataset is null");
  if (!out_text) return arg_error("out_text is null");
  return guarded([&] {
    *out_text = copy_string(abcdepth::points_csv_text(dataset->data));
    return ABCD_OK;
  });
}

abcd_status abcd_dataset_augmented_csv(const abcd_dataset* dataset, const abcd_options* options,
                                       char** out_text) {
  if (!dataset) return arg_error("dataset is null");
  if (!out_text) return arg_error("out_text is null");
  return guarded([&] {
    const auto eo = engine_options(options);
    const abcdepth::AugmentedDataSet augmented = abcdepth::augment(
        dataset->data, eo.artificial_count, eo.seed, abcdepth::bounding_domain(dataset->data, eo.margin));
    std::ostringstream out;
    abcdepth::write_augmented_csv(augmented, out);
    *out_text = copy_string(out.str());
    return ABCD_OK;
  });
}

void abcd_dataset_free(abcd_dataset* dataset) { delete dataset; }

abcd_status abcd_median(const abcd_dataset* dataset, const abcd_options* options,
                        abcd_result** out) {
  if (!dataset) return arg_error("dataset is null");
  if (!out) return arg_error("out pointer is null");
  return guarded([&] {
    const auto eo = engine_options(options);
    Stopwatch watch;
    const abcdepth::MedianResult result = abcdepth::tukey_median(dataset->data, eo);
    abcdepth::ResultDocument doc;
    doc.meta = make_meta("median", dataset->data, eo, watch.seconds());
    doc.payload = abcdepth::make_median_payload(result);
    return finish_result(ABCD_RESULT_MEDIAN, std::move(doc), out);
  });
}

abcd_status abcd_level_sets(const abcd_dataset* dataset, const abcd_options* options,
                            abcd_result** out) {
  if (!dataset) return arg_error("dataset is null");
  if (!out) return arg_error("out pointer is null");
  return guarded([&] {
    const auto eo = engine_options(options);
    Stopwatch watch;
    const abcdepth::MedianResult result = abcdepth::tukey_median(dataset->data, eo);
    abcdepth::ResultDocument doc;
    doc.meta = make_meta("levelsets", dataset->data, eo, watch.seconds());
    doc.payload = abcdepth::make_levelsets_payload(result);
    return finish_result(ABCD_RESULT_LEVEL_SETS, std::move(doc), out);
  });
}

abcd_status abcd_contour(const abcd_dataset* dataset, const abcd_options* options,
                         abcd_result** out) {
  if (!dataset) return arg_error("dataset is null");
  if (!out) return arg_error("out pointer is null");
  return guarded([&] {
    const auto eo = engine_options(options);
    Stopwatch watch;
    const abcdepth::MedianResult result = abcdepth::tukey_median(dataset->data, eo);
    const abcdepth::LevelSet& deepest = result.levels.back();
    const auto vertices = abcdepth::contour_2d(deepest, result.candidates);
    abcdepth::ResultDocument doc;
    doc.meta = make_meta("contour", dataset->data, eo, watch.seconds());
    doc.payload = abcdepth::make_contour_payload(deepest, vertices);
    return finish_result(ABCD_RESULT_CONTOUR, std::move(doc), out);
  });
}

abcd_status abcd_depth_of_sample(const abcd_dataset* dataset, const abcd_options* options,
                                 size_t index, abcd_result** out) {
  if (!dataset) return arg_error("dataset is null");
  if (!out) return arg_error("out pointer is null");
  return guarded([&] {
    const auto eo = engine_options(options);
    Stopwatch watch;
    const abcdepth::BallSystem system = depth_system(dataset->data, eo);
    const abcdepth::DepthResult result =
        abcdepth::depth_of_sample_point(dataset->data, system, index);
    abcdepth::ResultDocument doc;
    doc.meta = make_meta("depth", dataset->data, eo, watch.seconds());
    doc.payload = abcdepth::make_depth_payload(result, index);
    return finish_result(ABCD_RESULT_DEPTH, std::move(doc), out);
  });
}

abcd_status abcd_depth_of_point(const abcd_dataset* dataset, const abcd_options* options,
                                const double* x, size_t dim, abcd_result** out) {
  if (!dataset) return arg_error("dataset is null");
  if (!x) return arg_error("query point is null");
  if (!out) return arg_error("out pointer is null");
  return guarded([&] {
    const auto eo = engine_options(options);
    Stopwatch watch;
    const abcdepth::BallSystem system = depth_system(dataset->data, eo);
    const abcdepth::DepthResult result =
        abcdepth::depth_of_out_of_sample_point(dataset->data, system, {x, dim});
    abcdepth::ResultDocument doc;
    doc.meta = make_meta("depth", dataset->data, eo, watch.seconds());
    doc.payload = abcdepth::make_depth_payload(result);
    return finish_result(ABCD_RESULT_DEPTH, std::move(doc), out);
  });
}

abcd_status abcd_depths_of_all_samples(const abcd_dataset* dataset, const abcd_options* options,
                                       int64_t* out_numerators, int64_t* out_denominator) {
  if (!dataset) return arg_error("dataset is null");
  if (!out_numerators) return arg_error("out_numerators is null");
  if (!out_denominator) return arg_error("out_denominator is null");
  return guarded([&] {
    const auto eo = engine_options(options);
    const abcdepth::BallSystem system = depth_system(dataset->data, eo);
    for (std::size_t i = 0; i < dataset->data.size(); ++i) {
      out_numerators[i] = abcdepth::depth_of_sample_point(dataset->data, system, i).depth_num;
    }
    *out_denominator = static_cast<int64_t>(dataset->data.size());
    return ABCD_OK;
  });
}

abcd_result_kind abcd_result_get_kind(const abcd_result* result) {
  return result ? result->kind : ABCD_RESULT_MEDIAN;
}

abcd_status abcd_result_depth(const abcd_result* result, int64_t* out_num, int64_t* out_den) {
  if (!result) return arg_error("result is null");
  if (!out_num || !out_den) return arg_error("out pointer is null");
  if (const auto* median = std::get_if<abcdepth::MedianPayload>(&result->doc.payload)) {
    *out_num = median->depth_num;
    *out_den = median->depth_den;
    return ABCD_OK;
  }
  if (const auto* depth = std::get_if<abcdepth::DepthPayload>(&result->doc.payload)) {
    *out_num = depth->depth_num;
    *out_den = depth->depth_den;
    return ABCD_OK;
  }
  return arg_error("result carries no depth fraction");
}

abcd_status abcd_result_iterations(const abcd_result* result, size_t* out) {
  if (!result) return arg_error("result is null");
  if (!out) return arg_error("out pointer is null");
  if (const auto* median = std::get_if<abcdepth::MedianPayload>(&result->doc.payload)) {
    *out = median->iterations;
    return ABCD_OK;
  }
  if (const auto* depth = std::get_if<abcdepth::DepthPayload>(&result->doc.payload)) {
    *out = depth->iterations;
    return ABCD_OK;
  }
  return arg_error("result carries no iteration count");
}

abcd_status abcd_result_exit_ball_size(const abcd_result* result, int64_t* out) {
  if (!result) return arg_error("result is null");
  if (!out) return arg_error("out pointer is null");
  if (const auto* depth = std::get_if<abcdepth::DepthPayload>(&result->doc.payload)) {
    *out = depth->exit_ball_size;
    return ABCD_OK;
  }
  return arg_error("result is not a depth result");
}

abcd_status abcd_result_median_size(const abcd_result* result, size_t* out) {
  if (!result) return arg_error("result is null");
  if (!out) return arg_error("out pointer is null");
  if (const auto* median = std::get_if<abcdepth::MedianPayload>(&result->doc.payload)) {
    *out = median->members.size();
    return ABCD_OK;
  }
  return arg_error("result is not a median result");
}

abcd_status abcd_result_median_point(const abcd_result* result, size_t i, double* out_coords,
                                     size_t* out_index, int* out_artificial) {
  if (!result) return arg_error("result is null");
  const auto* median = std::get_if<abcdepth::MedianPayload>(&result->doc.payload);
  if (!median) return arg_error("result is not a median result");
  if (i >= median->members.size()) return arg_error("median member index out of range");
  const abcdepth::MemberRecord& member = median->members[i];
  if (out_coords) {
    std::memcpy(out_coords, member.point.data(), member.point.size() * sizeof(double));
  }
  if (out_index) *out_index = member.index - 1;
  if (out_artificial) *out_artificial = member.artificial ? 1 : 0;
  return ABCD_OK;
}

abcd_status abcd_result_level_count(const abcd_result* result, size_t* out) {
  if (!result) return arg_error("result is null");
  if (!out) return arg_error("out pointer is null");
  if (const auto* levels = std::get_if<abcdepth::LevelSetsPayload>(&result->doc.payload)) {
    *out = levels->levels.size();
    return ABCD_OK;
  }
  return arg_error("result is not a level-set result");
}

abcd_status abcd_result_level_info(const abcd_result* result, size_t level, int64_t* out_alpha_num,
                                   int64_t* out_alpha_den, int64_t* out_ball_size,
                                   size_t* out_member_count) {
  if (!result) return arg_error("result is null");
  const auto* levels = std::get_if<abcdepth::LevelSetsPayload>(&result->doc.payload);
  if (!levels) return arg_error("result is not a level-set result");
  if (level >= levels->levels.size()) return arg_error("level index out of range");
  const abcdepth::LevelRecord& record = levels->levels[level];
  if (out_alpha_num) *out_alpha_num = record.alpha_num;
  if (out_alpha_den) *out_alpha_den = record.alpha_den;
  if (out_ball_size) *out_ball_size = record.ball_size;
  if (out_member_count) *out_member_count = record.members.size();
  return ABCD_OK;
}

abcd_status abcd_result_contour_size(const abcd_result* result, size_t* out) {
  if (!result) return arg_error("result is null");
  if (!out) return arg_error("out pointer is null");
  if (const auto* contour = std::get_if<abcdepth::ContourPayload>(&result->doc.payload)) {
    *out = contour->vertices.size();
    return ABCD_OK;
  }
  return arg_error("result is not a contour result");
}

abcd_status abcd_result_contour_vertex(const abcd_result* result, size_t i, double* out_xy) {
  if (!result) return arg_error("result is null");
  if (!out_xy) return arg_error("out pointer is null");
  const auto* contour = std::get_if<abcdepth::ContourPayload>(&result->doc.payload);
  if (!contour) return arg_error("result is not a contour result");
  if (i >= contour->vertices.size()) return arg_error("contour vertex index out of range");
  out_xy[0] = contour->vertices[i][0];
  out_xy[1] = contour->vertices[i][1];
  return ABCD_OK;
}

abcd_status abcd_result_elapsed_seconds(const abcd_result* result, double* out) {
  if (!result) return arg_error("result is null");
  if (!out) return arg_error("out pointer is null");
  *out = result->doc.meta.elapsed_seconds;
  return ABCD_OK;
}

abcd_status abcd_result_to_json(const abcd_result* result, char** out_text) {
  if (!result) return arg_error("result is null");
  if (!out_text) return arg_error("out_text is null");
  return guarded([&] {
    *out_text = copy_string(abcdepth::result_json_text(result->doc));
    return ABCD_OK;
  });
}

abcd_status abcd_result_to_csv(const abcd_result* result, char** out_text) {
  if (!result) return arg_error("result is null");
  if (!out_text) return arg_error("out_text is null");
  return guarded([&] {
    *out_text = copy_string(abcdepth::result_csv_text(result->doc));
    return ABCD_OK;
  });
}

void abcd_result_free(abcd_result* result) { delete result; }

abcd_status abcd_exact_depth_1d(const double* values, size_t n, double x, int64_t* out_num,
                                int64_t* out_den) {
  if (!values) return arg_error("values pointer is null");
  if (!out_num || !out_den) return arg_error("out pointer is null");
  return guarded([&] {
    const abcdepth::DepthValue depth = abcdepth::exact_depth_1d({values, n}, x);
    *out_num = depth.num;
    *out_den = depth.den;
    return ABCD_OK;
  });
}

abcd_status abcd_exact_depth_2d(const abcd_dataset* dataset, const double* xy, int64_t* out_num,
                                int64_t* out_den) {
  if (!dataset) return arg_error("dataset is null");
  if (!xy) return arg_error("query point is null");
  if (!out_num || !out_den) return arg_error("out pointer is null");
  return guarded([&] {
    const abcdepth::DepthValue depth = abcdepth::exact_depth_2d(dataset->data, {xy, 2});
    *out_num = depth.num;
    *out_den = depth.den;
    return ABCD_OK;
  });
}

abcd_status abcd_exact_depth_small(const abcd_dataset* dataset, const double* x, size_t dim,
                                   int64_t* out_num, int64_t* out_den) {
  if (!dataset) return arg_error("dataset is null");
  if (!x) return arg_error("query point is null");
  if (!out_num || !out_den) return arg_error("out pointer is null");
  return guarded([&] {
    const abcdepth::DepthValue depth = abcdepth::exact_depth_smalld(dataset->data, {x, dim});
    *out_num = depth.num;
    *out_den = depth.den;
    return ABCD_OK;
  });
}

abcd_status abcd_direction_upper_bound(const abcd_dataset* dataset, const double* x, size_t dim,
                                       size_t direction_count, uint64_t seed, int64_t* out_num,
                                       int64_t* out_den) {
  if (!dataset) return arg_error("dataset is null");
  if (!x) return arg_error("query point is null");
  if (!out_num || !out_den) return arg_error("out pointer is null");
  return guarded([&] {
    const abcdepth::DirectionSet directions =
        abcdepth::DirectionSet::sampled_uniform(direction_count, dataset->data.dim(), seed);
    const abcdepth::DepthValue depth =
        abcdepth::direction_upper_bound(dataset->data, {x, dim}, directions);
    *out_num = depth.num;
    *out_den = depth.den;
    return ABCD_OK;
  });
}

abcd_status abcd_chi_square_cdf(double x, int dof, double* out) {
  if (!out) return arg_error("out pointer is null");
  return guarded([&] {
    *out = abcdepth::chi_square_cdf(x, dof);
    return ABCD_OK;
  });
}

} // extern "C"
