// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#include "abcdepth/hull.hpp"

#include <algorithm>
#include <string>

#include "abcdepth/error.hpp"

namespace abcdepth {
namespace {

double cross(const std::array<double, 2>& o, const std::array<double, 2>& a,
             const std::array<double, 2>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

} // namespace

std::vector<std::array<double, 2>> convex_hull_2d(std::vector<std::array<double, 2>> points) {
  if (points.empty()) {
    fail(Errc::invalid_argument, "convex hull of an empty point set");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n == 1) return points;
  if (n == 2) return points;

  // Andrew's monotone chain, strict turns only so collinear points fall out.
  std::vector<std::array<double, 2>> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  const std::size_t lower_end = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower_end && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1); // the closing copy of the start vertex
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

std::vector<std::array<double, 2>> contour_2d(const LevelSet& level, const DataSet& candidates) {
  if (candidates.dim() != 2) {
    fail(Errc::unsupported,
         "contour extraction supports dimension 2 only, got " + std::to_string(candidates.dim()));
  }
  if (level.members.empty()) {
    fail(Errc::invalid_argument, "contour of an empty level");
  }
  std::vector<std::array<double, 2>> pts;
  pts.reserve(level.members.size());
  for (std::size_t idx : level.members) {
    if (idx >= candidates.size()) {
      fail(Errc::invalid_argument,
           "level member " + std::to_string(idx) + " is outside the candidate set");
    }
    const auto p = candidates.point(idx);
    pts.push_back({p[0], p[1]});
  }
  return convex_hull_2d(std::move(pts));
}

} // namespace abcdepth
