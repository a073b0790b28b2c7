// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#include "abcdepth/dataset.hpp"

#include <cmath>
#include <string>

#include "abcdepth/error.hpp"

namespace abcdepth {

DataSet::DataSet(std::vector<double> coords, std::size_t dim) : coords_(std::move(coords)), dim_(dim) {
  if (dim_ == 0) fail(Errc::invalid_argument, "point dimension must be at least 1");
  if (coords_.empty()) fail(Errc::invalid_argument, "dataset must contain at least one point");
  if (coords_.size() % dim_ != 0)
    fail(Errc::dimension_mismatch, "coordinate buffer of " + std::to_string(coords_.size()) +
                                       " values is not divisible by dimension " + std::to_string(dim_));
  size_ = coords_.size() / dim_;
}

DataSet DataSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) fail(Errc::invalid_argument, "dataset must contain at least one point");
  const std::size_t dim = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim)
      fail(Errc::dimension_mismatch, "row " + std::to_string(i + 1) + " has " +
                                         std::to_string(rows[i].size()) + " values, expected " +
                                         std::to_string(dim));
    coords.insert(coords.end(), rows[i].begin(), rows[i].end());
  }
  return DataSet(std::move(coords), dim);
}

DataSet DataSet::from_rows(std::initializer_list<std::vector<double>> rows) {
  return from_rows(std::vector<std::vector<double>>(rows));
}

std::span<const double> DataSet::point(std::size_t i) const {
  if (i >= size_) fail(Errc::invalid_argument, "point index " + std::to_string(i) + " out of range");
  return {coords_.data() + i * dim_, dim_};
}

double DataSet::coord(std::size_t i, std::size_t axis) const {
  if (i >= size_ || axis >= dim_) fail(Errc::invalid_argument, "coordinate access out of range");
  return coords_[i * dim_ + axis];
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "distance between points of unequal dimension");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a[i] - b[i];
    s += t * t;
  }
  return std::sqrt(s);
}

} // namespace abcdepth
