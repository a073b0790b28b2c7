// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_AUGMENT_HPP
#define ABCDEPTH_AUGMENT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "abcdepth/dataset.hpp"

namespace abcdepth {

// Axis-aligned box, one [lo, hi] interval per axis.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  std::size_t dim() const noexcept { return lo.size(); }
  bool contains(std::span<const double> p) const;
};

inline constexpr double kDefaultDomainMargin = 0.1;
// Absolute half-width given to axes whose data range is zero.
inline constexpr double kZeroRangeHalfWidth = 1e-9;

// Data bounding box grown by margin * range per axis.
Box bounding_domain(const DataSet& data, double margin = kDefaultDomainMargin);

// Sample points followed by artificial points drawn uniformly from a box
// domain. Same seed, count and domain always reproduce the same points, and
// a shorter draw is a prefix of a longer one.
class AugmentedDataSet {
public:
  AugmentedDataSet(const DataSet& sample, std::size_t artificial_count, std::uint64_t seed, Box domain);

  const DataSet& all() const noexcept { return all_; }
  std::size_t sample_count() const noexcept { return sample_count_; }
  std::size_t artificial_count() const noexcept { return all_.size() - sample_count_; }
  bool is_artificial(std::size_t index) const noexcept { return index >= sample_count_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const Box& domain() const noexcept { return domain_; }

  // The artificial block alone; empty optional when count was zero.
  std::optional<DataSet> artificial_points() const;

private:
  DataSet all_;
  std::size_t sample_count_;
  std::uint64_t seed_;
  Box domain_;
};

AugmentedDataSet augment(const DataSet& sample, std::size_t count, std::uint64_t seed, const Box& domain);

inline constexpr std::size_t kDefaultArtificialCount = 1000;

} // namespace abcdepth

#endif
