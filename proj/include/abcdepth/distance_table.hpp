// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_DISTANCE_TABLE_HPP
#define ABCDEPTH_DISTANCE_TABLE_HPP

#include <cstddef>
#include <vector>

#include "abcdepth/dataset.hpp"

namespace abcdepth {

// Pairwise Euclidean distances packed as a lower triangle: one row per point
// i > 0 holding the distances to all points j < i.
class TriangularDistanceTable {
public:
  explicit TriangularDistanceTable(const DataSet& data);

  std::size_t size() const noexcept { return n_; }

  // Symmetric lookup; the diagonal is 0 without being stored.
  double operator()(std::size_t i, std::size_t j) const;

  std::span<const double> packed() const noexcept { return entries_; }

private:
  std::vector<double> entries_; // n*(n-1)/2 values
  std::size_t n_ = 0;
};

TriangularDistanceTable build_distance_table(const DataSet& data);

} // namespace abcdepth

#endif
