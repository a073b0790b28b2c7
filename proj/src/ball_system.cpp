// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#include "abcdepth/ball_system.hpp"

#include <algorithm>
#include <string>

#include "abcdepth/error.hpp"

namespace abcdepth {

BallSystem BallSystem::build(const DataSet& data, const TriangularDistanceTable& table,
                             const DataSet* extra_centers) {
  if (table.size() != data.size())
    fail(Errc::invalid_argument, "distance table built for a different sample size");
  if (extra_centers && extra_centers->dim() != data.dim())
    fail(Errc::dimension_mismatch, "extra centers have dimension " +
                                       std::to_string(extra_centers->dim()) + ", sample has " +
                                       std::to_string(data.dim()));

  const std::size_t n = data.size();
  const std::size_t extra = extra_centers ? extra_centers->size() : 0;

  BallSystem sys;
  sys.n_sample_ = n;
  sys.dim_ = data.dim();
  sys.rows_.resize((n + extra) * n);
  sys.centers_.reserve((n + extra) * sys.dim_);
  sys.centers_.insert(sys.centers_.end(), data.flat().begin(), data.flat().end());
  if (extra_centers)
    sys.centers_.insert(sys.centers_.end(), extra_centers->flat().begin(), extra_centers->flat().end());

  for (std::size_t c = 0; c < n; ++c) {
    double* row = sys.rows_.data() + c * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = table(c, j);
    std::sort(row, row + n);
  }
  for (std::size_t e = 0; e < extra; ++e) {
    double* row = sys.rows_.data() + (n + e) * n;
    const auto ce = extra_centers->point(e);
    for (std::size_t j = 0; j < n; ++j) row[j] = euclidean_distance(ce, data.point(j));
    std::sort(row, row + n);
  }
  return sys;
}

std::span<const double> BallSystem::center(std::size_t c) const {
  if (c >= center_count()) fail(Errc::invalid_argument, "center index out of range");
  return {centers_.data() + c * dim_, dim_};
}

std::span<const double> BallSystem::sorted_row(std::size_t c) const {
  if (c >= center_count()) fail(Errc::invalid_argument, "center index out of range");
  return {rows_.data() + c * n_sample_, n_sample_};
}

double BallSystem::radius(std::size_t c, std::size_t m) const {
  if (m < 1 || m > n_sample_)
    fail(Errc::invalid_argument, "ball size " + std::to_string(m) + " outside 1.." +
                                     std::to_string(n_sample_));
  return sorted_row(c)[m - 1];
}

std::size_t BallSystem::min_ball_containing(std::size_t c, double dist) const {
  const auto row = sorted_row(c);
  const auto it = std::lower_bound(row.begin(), row.end(), dist);
  return static_cast<std::size_t>(it - row.begin()) + 1;
}

BallSystem build_ball_system(const DataSet& data, const TriangularDistanceTable& table,
                             const DataSet* extra_centers) {
  return BallSystem::build(data, table, extra_centers);
}

bool ball_contains(std::span<const double> center, double radius, std::span<const double> query) {
  if (radius < 0.0) fail(Errc::invalid_argument, "negative ball radius");
  return euclidean_distance(center, query) <= radius;
}

} // namespace abcdepth
