// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#include "abcdepth/distance_table.hpp"

#include <string>

#include "abcdepth/error.hpp"

namespace abcdepth {

TriangularDistanceTable::TriangularDistanceTable(const DataSet& data) : n_(data.size()) {
  entries_.resize(n_ * (n_ - 1) / 2);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n_; ++i) {
    const auto pi = data.point(i);
    for (std::size_t j = 0; j < i; ++j) entries_[k++] = euclidean_distance(pi, data.point(j));
  }
}

double TriangularDistanceTable::operator()(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_)
    fail(Errc::invalid_argument,
         "distance lookup (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  if (i == j) return 0.0;
  if (i < j) std::swap(i, j);
  return entries_[i * (i - 1) / 2 + j];
}

TriangularDistanceTable build_distance_table(const DataSet& data) { return TriangularDistanceTable(data); }

} // namespace abcdepth
