// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_BALL_SYSTEM_HPP
#define ABCDEPTH_BALL_SYSTEM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "abcdepth/dataset.hpp"
#include "abcdepth/distance_table.hpp"

namespace abcdepth {

// Per-center sorted distances to the sample. A ball "of size m" around a
// center is the closed ball whose radius is the m-th smallest of these
// distances, so it contains at least m sample points (more under ties).
// Centers are the sample points themselves, optionally followed by extra
// centers; every row has exactly sample_size() entries either way.
class BallSystem {
public:
  static BallSystem build(const DataSet& data, const TriangularDistanceTable& table,
                          const DataSet* extra_centers = nullptr);

  std::size_t center_count() const noexcept { return centers_.size() / dim_; }
  std::size_t sample_size() const noexcept { return n_sample_; }
  std::size_t dim() const noexcept { return dim_; }

  std::span<const double> center(std::size_t c) const;
  std::span<const double> sorted_row(std::size_t c) const;

  // m-th smallest distance from center c to the sample, m in 1..sample_size().
  double radius(std::size_t c, std::size_t m) const;

  // Smallest m such that the size-m ball around center c reaches a point at
  // the given distance; may exceed sample_size() when nothing does.
  std::size_t min_ball_containing(std::size_t c, double dist) const;

private:
  BallSystem() = default;

  std::vector<double> rows_;    // center_count x n_sample, each row ascending
  std::vector<double> centers_; // center_count x dim
  std::size_t n_sample_ = 0;
  std::size_t dim_ = 0;
};

BallSystem build_ball_system(const DataSet& data, const TriangularDistanceTable& table,
                             const DataSet* extra_centers = nullptr);

// Closed-ball membership: boundary points count as contained.
bool ball_contains(std::span<const double> center, double radius, std::span<const double> query);

} // namespace abcdepth

#endif
