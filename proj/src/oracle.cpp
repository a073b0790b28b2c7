// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#include "abcdepth/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "abcdepth/error.hpp"
#include "abcdepth/rng.hpp"

namespace abcdepth {
namespace {

constexpr std::size_t kSmallDMaxPoints = 25;
constexpr std::size_t kSmallDMaxDim = 3;
constexpr double kUnitNormTolerance = 1e-12;

double dot2(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return a[0] * b[0] + a[1] * b[1];
}

double cross2(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> cross3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool exactly_parallel3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  const auto c = cross3(a, b);
  return c[0] == 0.0 && c[1] == 0.0 && c[2] == 0.0;
}

// Minimum closed-halfline count over halflines at the origin: the vectors are
// all nonzero scalars, so the two candidate normals +1 and -1 suffice.
std::int64_t min_closed_1d(const std::vector<double>& values) {
  std::int64_t pos = 0;
  std::int64_t neg = 0;
  for (double v : values) {
    if (v > 0.0) {
      ++pos;
    } else if (v < 0.0) {
      ++neg;
    }
  }
  return std::min(pos, neg);
}

// Minimum closed-halfplane count over halfplanes through the origin, for a set
// of nonzero vectors. Candidate boundaries pass through some input vector;
// points exactly on the boundary are settled by a nested 1-D minimization
// along the boundary line.
std::int64_t min_closed_2d(const std::vector<std::array<double, 2>>& vecs) {
  if (vecs.empty()) return 0;
  auto best = static_cast<std::int64_t>(vecs.size());
  for (const auto& p : vecs) {
    for (double sign : {1.0, -1.0}) {
      std::int64_t strict = 0;
      std::int64_t along = 0;
      std::int64_t against = 0;
      for (const auto& q : vecs) {
        const double s = sign * cross2(p, q);
        if (s > 0.0) {
          ++strict;
        } else if (s == 0.0) {
          if (dot2(p, q) > 0.0) {
            ++along;
          } else {
            ++against;
          }
        }
      }
      best = std::min(best, strict + std::min(along, against));
    }
  }
  return best;
}

// Same minimization one dimension up: candidate normals are cross products of
// input pairs, boundary points recurse into the 2-D problem inside the plane.
std::int64_t min_closed_3d(const std::vector<std::array<double, 3>>& vecs) {
  if (vecs.empty()) return 0;
  auto best = static_cast<std::int64_t>(vecs.size());
  bool spanning_pair = false;
  std::vector<std::array<double, 2>> boundary;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    for (std::size_t j = i + 1; j < vecs.size(); ++j) {
      const auto normal = cross3(vecs[i], vecs[j]);
      if (normal[0] == 0.0 && normal[1] == 0.0 && normal[2] == 0.0) continue;
      spanning_pair = true;
      const auto& b1 = vecs[i];
      for (double sign : {1.0, -1.0}) {
        const std::array<double, 3> u = {sign * normal[0], sign * normal[1], sign * normal[2]};
        const auto b2 = cross3(u, b1);
        std::int64_t strict = 0;
        boundary.clear();
        for (const auto& q : vecs) {
          // The pivots span the boundary plane; anything parallel to one of
          // them lies in it exactly even when the dot product rounds away.
          const bool pivot_ray = exactly_parallel3(q, vecs[i]) || exactly_parallel3(q, vecs[j]);
          const double s = pivot_ray ? 0.0 : dot3(u, q);
          if (s > 0.0) {
            ++strict;
          } else if (s == 0.0) {
            const double c2 = exactly_parallel3(q, b1) ? 0.0 : dot3(q, b2);
            boundary.push_back({dot3(q, b1), c2});
          }
        }
        best = std::min(best, strict + min_closed_2d(boundary));
      }
    }
  }
  if (!spanning_pair) {
    // Everything sits on one line through the origin.
    std::vector<double> line;
    line.reserve(vecs.size());
    for (const auto& q : vecs) line.push_back(dot3(vecs.front(), q));
    best = min_closed_1d(line);
  }
  return best;
}

} // namespace

DepthValue exact_depth_1d(std::span<const double> values, double x) {
  if (values.empty()) fail(Errc::invalid_argument, "exact_depth_1d: empty sample");
  std::int64_t le = 0;
  std::int64_t ge = 0;
  for (double v : values) {
    if (v <= x) ++le;
    if (v >= x) ++ge;
  }
  return {std::min(le, ge), static_cast<std::int64_t>(values.size())};
}

DepthValue exact_depth_2d(const DataSet& points, std::span<const double> x) {
  if (points.dim() != 2) {
    fail(Errc::dimension_mismatch,
         "exact_depth_2d: sample dimension is " + std::to_string(points.dim()) + ", expected 2");
  }
  if (x.size() != 2) {
    fail(Errc::dimension_mismatch,
         "exact_depth_2d: query dimension is " + std::to_string(x.size()) + ", expected 2");
  }
  const auto n = static_cast<std::int64_t>(points.size());
  std::int64_t coincident = 0;
  std::vector<std::array<double, 2>> rel;
  rel.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points.point(i);
    const std::array<double, 2> v = {p[0] - x[0], p[1] - x[1]};
    if (v[0] == 0.0 && v[1] == 0.0) {
      ++coincident;
    } else {
      rel.push_back(v);
    }
  }
  if (rel.empty()) return {n, n};

  // Sweep the candidate boundary directions in angular order. For the
  // boundary through p, the closed count splits into strictly-inside points
  // plus boundary points, and the two infinitesimal rotations keep either the
  // boundary points ahead of p or the ones behind it.
  std::sort(rel.begin(), rel.end(), [](const auto& a, const auto& b) {
    return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
  });
  auto best = static_cast<std::int64_t>(rel.size());
  for (const auto& p : rel) {
    for (double sign : {1.0, -1.0}) {
      std::int64_t strict = 0;
      std::int64_t ahead = 0;
      std::int64_t behind = 0;
      for (const auto& q : rel) {
        const double s = sign * cross2(p, q);
        if (s > 0.0) {
          ++strict;
        } else if (s == 0.0) {
          if (dot2(p, q) > 0.0) {
            ++ahead;
          } else {
            ++behind;
          }
        }
      }
      best = std::min({best, strict + ahead, strict + behind});
    }
  }
  return {coincident + best, n};
}

DepthValue exact_depth_smalld(const DataSet& points, std::span<const double> x) {
  const std::size_t d = points.dim();
  if (x.size() != d) {
    fail(Errc::dimension_mismatch,
         "exact_depth_smalld: query dimension is " + std::to_string(x.size()) + ", expected " +
             std::to_string(d));
  }
  if (points.size() > kSmallDMaxPoints) {
    fail(Errc::cost_guard, "exact_depth_smalld: sample size " + std::to_string(points.size()) +
                               " exceeds the guard of " + std::to_string(kSmallDMaxPoints));
  }
  if (d > kSmallDMaxDim) {
    fail(Errc::cost_guard, "exact_depth_smalld: dimension " + std::to_string(d) +
                               " exceeds the guard of " + std::to_string(kSmallDMaxDim));
  }
  const auto n = static_cast<std::int64_t>(points.size());
  std::int64_t coincident = 0;
  std::int64_t best = 0;
  if (d == 1) {
    std::vector<double> rel;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double v = points.coord(i, 0) - x[0];
      if (v == 0.0) {
        ++coincident;
      } else {
        rel.push_back(v);
      }
    }
    if (rel.empty()) return {n, n};
    best = min_closed_1d(rel);
  } else if (d == 2) {
    std::vector<std::array<double, 2>> rel;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto p = points.point(i);
      const std::array<double, 2> v = {p[0] - x[0], p[1] - x[1]};
      if (v[0] == 0.0 && v[1] == 0.0) {
        ++coincident;
      } else {
        rel.push_back(v);
      }
    }
    if (rel.empty()) return {n, n};
    best = min_closed_2d(rel);
  } else {
    std::vector<std::array<double, 3>> rel;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto p = points.point(i);
      const std::array<double, 3> v = {p[0] - x[0], p[1] - x[1], p[2] - x[2]};
      if (v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0) {
        ++coincident;
      } else {
        rel.push_back(v);
      }
    }
    if (rel.empty()) return {n, n};
    best = min_closed_3d(rel);
  }
  return {coincident + best, n};
}

DirectionSet::DirectionSet(std::vector<double> dirs, std::size_t dim, Provenance provenance)
    : dirs_(std::move(dirs)), dim_(dim), provenance_(provenance) {}

DirectionSet DirectionSet::sampled_uniform(std::size_t count, std::size_t dim,
                                           std::uint64_t seed) {
  if (count == 0) fail(Errc::invalid_argument, "sampled_uniform: count must be positive");
  if (dim == 0) fail(Errc::invalid_argument, "sampled_uniform: dim must be positive");
  Rng rng(seed);
  std::vector<double> dirs;
  dirs.reserve(count * dim);
  std::vector<double> g(dim);
  for (std::size_t k = 0; k < count; ++k) {
    double norm = 0.0;
    do {
      norm = 0.0;
      for (std::size_t a = 0; a < dim; ++a) {
        g[a] = rng.normal();
        norm += g[a] * g[a];
      }
      norm = std::sqrt(norm);
    } while (norm < 1e-8);
    for (std::size_t a = 0; a < dim; ++a) dirs.push_back(g[a] / norm);
  }
  return DirectionSet(std::move(dirs), dim, Provenance::sampled_uniform);
}

DirectionSet DirectionSet::pairwise(const DataSet& points) {
  const std::size_t d = points.dim();
  std::vector<double> dirs;
  std::vector<double> v(d);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      double norm = 0.0;
      for (std::size_t a = 0; a < d; ++a) {
        v[a] = points.coord(i, a) - points.coord(j, a);
        norm += v[a] * v[a];
      }
      if (norm == 0.0) continue;
      norm = std::sqrt(norm);
      for (std::size_t a = 0; a < d; ++a) dirs.push_back(v[a] / norm);
      for (std::size_t a = 0; a < d; ++a) dirs.push_back(-v[a] / norm);
      if (d == 2) {
        dirs.push_back(-v[1] / norm);
        dirs.push_back(v[0] / norm);
        dirs.push_back(v[1] / norm);
        dirs.push_back(-v[0] / norm);
      }
    }
  }
  if (dirs.empty()) {
    fail(Errc::invalid_argument, "pairwise directions: all points coincide");
  }
  return DirectionSet(std::move(dirs), d, Provenance::pairwise);
}

DirectionSet DirectionSet::from_raw(std::vector<double> dirs, std::size_t dim,
                                    Provenance provenance) {
  if (dim == 0) fail(Errc::invalid_argument, "direction set: dim must be positive");
  if (dirs.empty() || dirs.size() % dim != 0) {
    fail(Errc::invalid_argument, "direction set: flat size " + std::to_string(dirs.size()) +
                                     " is not a positive multiple of dim " + std::to_string(dim));
  }
  for (std::size_t k = 0; k * dim < dirs.size(); ++k) {
    double norm = 0.0;
    for (std::size_t a = 0; a < dim; ++a) norm += dirs[k * dim + a] * dirs[k * dim + a];
    if (std::abs(std::sqrt(norm) - 1.0) > kUnitNormTolerance) {
      fail(Errc::invalid_argument, "direction set: entry " + std::to_string(k) + " is not unit length");
    }
  }
  return DirectionSet(std::move(dirs), dim, provenance);
}

std::span<const double> DirectionSet::at(std::size_t i) const {
  if (i >= count()) {
    fail(Errc::invalid_argument, "direction index " + std::to_string(i) + " out of range");
  }
  return {dirs_.data() + i * dim_, dim_};
}

DepthValue direction_upper_bound(const DataSet& points, std::span<const double> x,
                                 const DirectionSet& directions) {
  if (points.dim() != directions.dim() || x.size() != points.dim()) {
    fail(Errc::dimension_mismatch, "direction_upper_bound: dimensions disagree");
  }
  const std::size_t d = points.dim();
  const auto n = static_cast<std::int64_t>(points.size());
  std::int64_t best = n;
  for (std::size_t k = 0; k < directions.count(); ++k) {
    const auto u = directions.at(k);
    double tx = 0.0;
    for (std::size_t a = 0; a < d; ++a) tx += u[a] * x[a];
    std::int64_t count = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto p = points.point(i);
      double t = 0.0;
      for (std::size_t a = 0; a < d; ++a) t += u[a] * p[a];
      if (t <= tx) ++count;
    }
    best = std::min(best, count);
    if (best == 0) break;
  }
  return {best, n};
}

} // namespace abcdepth
