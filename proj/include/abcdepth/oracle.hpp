// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_ORACLE_HPP
#define ABCDEPTH_ORACLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "abcdepth/dataset.hpp"

namespace abcdepth {

// Depth as the unreduced count-over-sample-size fraction.
struct DepthValue {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const DepthValue& a, const DepthValue& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// min(#{v <= x}, #{v >= x}) / n.
DepthValue exact_depth_1d(std::span<const double> values, double x);

// Exact halfspace depth in the plane: the smallest closed-halfplane count over
// all halfplanes containing x. Boundary directions are enumerated in angular
// order around x and ties are resolved by sign predicates rather than angle
// comparisons, so coincident and collinear points need no special casing.
DepthValue exact_depth_2d(const DataSet& points, std::span<const double> x);

// Brute-force exact depth for d <= 3, n <= 25 (cost-guarded): minimizes over
// candidate halfspace normals spanned by difference vectors, recursing into
// the boundary hyperplane to settle points that sit exactly on it.
DepthValue exact_depth_smalld(const DataSet& points, std::span<const double> x);

class DirectionSet {
public:
  enum class Provenance { sampled_uniform, pairwise, custom };

  static DirectionSet sampled_uniform(std::size_t count, std::size_t dim, std::uint64_t seed);
  // Normalized point differences; in 2-D their perpendiculars are included too.
  static DirectionSet pairwise(const DataSet& points);
  static DirectionSet from_raw(std::vector<double> dirs, std::size_t dim,
                               Provenance provenance = Provenance::custom);

  std::size_t count() const noexcept { return dirs_.size() / dim_; }
  std::size_t dim() const noexcept { return dim_; }
  Provenance provenance() const noexcept { return provenance_; }
  std::span<const double> at(std::size_t i) const;

private:
  DirectionSet(std::vector<double> dirs, std::size_t dim, Provenance provenance);

  std::vector<double> dirs_;
  std::size_t dim_;
  Provenance provenance_;
};

// min over the direction set of #{i : <u, x_i> <= <u, x>} / n. Always an
// upper bound on the exact depth since it minimizes over fewer halfspaces.
DepthValue direction_upper_bound(const DataSet& points, std::span<const double> x,
                                 const DirectionSet& directions);

} // namespace abcdepth

#endif
