// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_ENGINE_HPP
#define ABCDEPTH_ENGINE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "abcdepth/augment.hpp"
#include "abcdepth/ball_system.hpp"
#include "abcdepth/dataset.hpp"
#include "abcdepth/rational.hpp"

namespace abcdepth {

// One depth region approximation: the candidates lying inside every center's
// ball of size ball_size. The label alpha_num/alpha_den is the depth bound
// (n - ball_size + 1)/n certified for its members, kept unreduced.
struct LevelSet {
  std::int64_t alpha_num = 0;
  std::int64_t alpha_den = 1;
  std::int64_t ball_size = 0;
  std::vector<std::size_t> members; // ascending candidate indices, 0-based

  friend bool operator==(const LevelSet&, const LevelSet&) = default;
};

struct LevelSweep {
  std::vector<LevelSet> levels; // non-empty sets, deepest last
  std::size_t iterations = 0;   // ball sizes evaluated, including a final empty probe
};

struct MedianResult {
  explicit MedianResult(DataSet candidate_points) : candidates(std::move(candidate_points)) {}

  std::vector<std::size_t> median_indices; // members of the deepest level
  std::int64_t depth_num = 0;              // label of that level, over depth_den = n
  std::int64_t depth_den = 1;
  std::vector<LevelSet> levels;
  std::size_t iterations = 0;
  DataSet candidates;           // sample points first, artificial after
  std::size_t sample_count = 0;

  DataSet median_points() const;
};

enum class DepthMode { sample_point, out_of_sample };

struct DepthResult {
  std::vector<double> point;
  std::int64_t depth_num = 0;
  std::int64_t depth_den = 1;
  std::int64_t exit_ball_size = 0; // ball size that first excluded the point; 0 if none did
  std::size_t iterations = 0;      // shrink steps executed
  DepthMode mode = DepthMode::sample_point;

  friend bool operator==(const DepthResult&, const DepthResult&) = default;
};

struct EngineOptions {
  std::size_t artificial_count = 0;
  std::uint64_t seed = 0;
  double margin = kDefaultDomainMargin;
};

Rational default_start_alpha(std::size_t dim);

// Shrinks the ball size one step at a time from the start_alpha size,
// collecting the candidates inside every center's ball at each size. Stops
// after the first level with at most one member, or just before the first
// empty one. When even the starting level is empty the size grows instead
// until the level is populated, and that single deepest level is returned.
// The first data.size() candidates must be the sample points themselves.
LevelSweep compute_level_sets(const DataSet& data, const BallSystem& system,
                              const DataSet& candidates, const Rational& start_alpha);

// Full pipeline: optional augmentation, distance table, ball system (with the
// artificial points serving as both candidates and extra centers), level
// sweep. The reported depth denominator is always the original sample size.
MedianResult tukey_median(const DataSet& data, const EngineOptions& options = {});

// Grows k = 2, 3, ... and returns (k-1)/n at the first k where some center's
// ball of size n-k+1 misses the point; n/n when no ball ever misses it.
DepthResult depth_of_sample_point(const DataSet& data, const BallSystem& system,
                                  std::size_t index);

// Same loop for an arbitrary point; ball radii still come from sample
// distances only, so the query contributes nothing to any radius.
DepthResult depth_of_out_of_sample_point(const DataSet& data, const BallSystem& system,
                                         std::span<const double> x);

} // namespace abcdepth

#endif
