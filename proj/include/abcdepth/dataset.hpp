// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_DATASET_HPP
#define ABCDEPTH_DATASET_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace abcdepth {

// Ordered collection of points with a common dimension. Row-major storage,
// repetitions allowed, never empty.
class DataSet {
public:
  DataSet(std::vector<double> coords, std::size_t dim);
  static DataSet from_rows(const std::vector<std::vector<double>>& rows);
  static DataSet from_rows(std::initializer_list<std::vector<double>> rows);

  std::size_t size() const noexcept { return size_; }
  std::size_t dim() const noexcept { return dim_; }

  std::span<const double> point(std::size_t i) const;
  double coord(std::size_t i, std::size_t axis) const;
  std::span<const double> flat() const noexcept { return coords_; }

  friend bool operator==(const DataSet& a, const DataSet& b) {
    return a.dim_ == b.dim_ && a.coords_ == b.coords_;
  }

private:
  std::vector<double> coords_;
  std::size_t size_ = 0;
  std::size_t dim_ = 0;
};

// Shared distance kernel; every distance in the project goes through here so
// identical inputs always produce identical doubles.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

} // namespace abcdepth

#endif
