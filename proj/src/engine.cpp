// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#include "abcdepth/engine.hpp"

#include <algorithm>
#include <string>

#include "abcdepth/distance_table.hpp"
#include "abcdepth/error.hpp"

namespace abcdepth {
namespace {

// Smallest ball size whose ball around every center still holds the point:
// the max over centers of the minimal containing size. Membership in a level
// of size m is exactly min_containing_size <= m, ties included, because each
// row is consulted with the same <= comparison the radius test would use.
std::vector<std::int64_t> min_containing_sizes(const BallSystem& system,
                                               const DataSet& candidates) {
  const std::size_t centers = system.center_count();
  std::vector<std::int64_t> sizes(candidates.size(), 1);
  // Center-outer keeps one sorted row cache-hot across all candidates; the
  // max over centers is order-independent, so the result is unchanged.
  for (std::size_t c = 0; c < centers; ++c) {
    const auto center = system.center(c);
    const auto row = system.sorted_row(c);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const double dist = euclidean_distance(center, candidates.point(a));
      auto& best = sizes[a];
      // The ball at the current max size already reaches this far, so this
      // center cannot raise the max: one comparison replaces the search.
      if (dist <= row[static_cast<std::size_t>(best) - 1]) continue;
      // Entries below best are all smaller than dist, so searching the tail
      // finds the same minimal containing size a full-row search would.
      const auto it = std::lower_bound(row.begin() + best, row.end(), dist);
      best = static_cast<std::int64_t>(it - row.begin()) + 1;
    }
  }
  return sizes;
}

LevelSet collect_level(const std::vector<std::int64_t>& sizes, std::int64_t n, std::int64_t m) {
  LevelSet level;
  level.alpha_num = n - m + 1;
  level.alpha_den = n;
  level.ball_size = m;
  for (std::size_t a = 0; a < sizes.size(); ++a) {
    if (sizes[a] <= m) level.members.push_back(a);
  }
  return level;
}

DepthResult depth_loop(const BallSystem& system, std::span<const double> x, DepthMode mode) {
  const auto n = static_cast<std::int64_t>(system.sample_size());
  const std::size_t centers = system.center_count();
  std::vector<double> dist(centers);
  for (std::size_t c = 0; c < centers; ++c) {
    dist[c] = euclidean_distance(system.center(c), x);
  }

  DepthResult result;
  result.point.assign(x.begin(), x.end());
  result.depth_den = n;
  result.mode = mode;
  for (std::int64_t k = 2; k <= n; ++k) {
    const std::int64_t m = n - k + 1;
    result.iterations = static_cast<std::size_t>(k - 1);
    for (std::size_t c = 0; c < centers; ++c) {
      if (dist[c] > system.radius(c, static_cast<std::size_t>(m))) {
        result.depth_num = k - 1;
        result.exit_ball_size = m;
        return result;
      }
    }
  }
  result.depth_num = n;
  result.exit_ball_size = 0;
  return result;
}

void check_system_matches(const DataSet& data, const BallSystem& system) {
  if (system.sample_size() != data.size()) {
    fail(Errc::invalid_argument,
         "ball system was built for a sample of " + std::to_string(system.sample_size()) +
             " points, got " + std::to_string(data.size()));
  }
  if (system.dim() != data.dim()) {
    fail(Errc::dimension_mismatch,
         "ball system dimension " + std::to_string(system.dim()) + " does not match data dimension " +
             std::to_string(data.dim()));
  }
}

} // namespace

Rational default_start_alpha(std::size_t dim) {
  return Rational(1, static_cast<std::int64_t>(dim) + 1);
}

DataSet MedianResult::median_points() const {
  std::vector<std::vector<double>> rows;
  rows.reserve(median_indices.size());
  for (std::size_t idx : median_indices) {
    const auto p = candidates.point(idx);
    rows.emplace_back(p.begin(), p.end());
  }
  return DataSet::from_rows(rows);
}

LevelSweep compute_level_sets(const DataSet& data, const BallSystem& system,
                              const DataSet& candidates, const Rational& start_alpha) {
  check_system_matches(data, system);
  if (candidates.dim() != data.dim()) {
    fail(Errc::dimension_mismatch,
         "candidate dimension " + std::to_string(candidates.dim()) + " does not match data dimension " +
             std::to_string(data.dim()));
  }
  if (candidates.size() < data.size()) {
    fail(Errc::invalid_argument, "candidates must include the sample points");
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!std::ranges::equal(candidates.point(i), data.point(i))) {
      fail(Errc::invalid_argument,
           "candidate " + std::to_string(i) + " does not equal sample point " + std::to_string(i) +
               "; candidates must start with the sample");
    }
  }
  if (start_alpha.num <= 0 || start_alpha.num > start_alpha.den) {
    fail(Errc::invalid_argument, "start alpha must lie in (0, 1]");
  }

  const auto n = static_cast<std::int64_t>(data.size());
  LevelSweep sweep;

  // All sample points coincident: every ball around them has radius zero, so
  // each level would repeat the same member list down to size 1. Report the
  // one meaningful level instead.
  if (system.radius(0, data.size()) == 0.0) {
    const auto sizes = min_containing_sizes(system, candidates);
    sweep.levels.push_back(collect_level(sizes, n, 1));
    sweep.iterations = 1;
    return sweep;
  }

  const auto sizes = min_containing_sizes(system, candidates);
  const std::int64_t m_start = ball_size_for(n, start_alpha);
  const std::int64_t m_floor = *std::min_element(sizes.begin(), sizes.end());

  if (m_floor > m_start) {
    // The starting level came up empty; the deepest populated level is the
    // one at the smallest size any candidate attains.
    sweep.levels.push_back(collect_level(sizes, n, m_floor));
    sweep.iterations = 2;
    return sweep;
  }

  for (std::int64_t m = m_start; m >= 1; --m) {
    ++sweep.iterations;
    LevelSet level = collect_level(sizes, n, m);
    if (level.members.empty()) break;
    const bool last = level.members.size() <= 1;
    sweep.levels.push_back(std::move(level));
    if (last) break;
  }
  return sweep;
}

MedianResult tukey_median(const DataSet& data, const EngineOptions& options) {
  const AugmentedDataSet augmented =
      augment(data, options.artificial_count, options.seed, bounding_domain(data, options.margin));
  const TriangularDistanceTable table = build_distance_table(data);
  const auto artificial = augmented.artificial_points();
  const BallSystem system =
      build_ball_system(data, table, artificial ? &*artificial : nullptr);

  LevelSweep sweep =
      compute_level_sets(data, system, augmented.all(), default_start_alpha(data.dim()));

  MedianResult result(augmented.all());
  result.sample_count = data.size();
  result.iterations = sweep.iterations;
  result.levels = std::move(sweep.levels);
  const LevelSet& deepest = result.levels.back();
  result.median_indices = deepest.members;
  result.depth_num = deepest.alpha_num;
  result.depth_den = deepest.alpha_den;
  return result;
}

DepthResult depth_of_sample_point(const DataSet& data, const BallSystem& system,
                                  std::size_t index) {
  check_system_matches(data, system);
  if (index >= data.size()) {
    fail(Errc::invalid_argument, "sample index " + std::to_string(index) + " out of range 0.." +
                                     std::to_string(data.size() - 1));
  }
  return depth_loop(system, data.point(index), DepthMode::sample_point);
}

DepthResult depth_of_out_of_sample_point(const DataSet& data, const BallSystem& system,
                                         std::span<const double> x) {
  check_system_matches(data, system);
  if (x.size() != data.dim()) {
    fail(Errc::dimension_mismatch, "query has dimension " + std::to_string(x.size()) +
                                       ", sample has dimension " + std::to_string(data.dim()));
  }
  return depth_loop(system, x, DepthMode::out_of_sample);
}

} // namespace abcdepth
