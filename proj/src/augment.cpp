// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#include "abcdepth/augment.hpp"

#include <algorithm>

#include "abcdepth/error.hpp"
#include "abcdepth/rng.hpp"

namespace abcdepth {

bool Box::contains(std::span<const double> p) const {
  if (p.size() != dim()) fail(Errc::dimension_mismatch, "point dimension does not match box");
  for (std::size_t a = 0; a < p.size(); ++a)
    if (p[a] < lo[a] || p[a] > hi[a]) return false;
  return true;
}

Box bounding_domain(const DataSet& data, double margin) {
  if (margin < 0.0) fail(Errc::invalid_argument, "domain margin must be nonnegative");
  const std::size_t d = data.dim();
  Box box;
  box.lo.assign(d, 0.0);
  box.hi.assign(d, 0.0);
  for (std::size_t a = 0; a < d; ++a) {
    double mn = data.coord(0, a);
    double mx = mn;
    for (std::size_t i = 1; i < data.size(); ++i) {
      mn = std::min(mn, data.coord(i, a));
      mx = std::max(mx, data.coord(i, a));
    }
    const double range = mx - mn;
    if (range == 0.0) {
      box.lo[a] = mn - kZeroRangeHalfWidth;
      box.hi[a] = mx + kZeroRangeHalfWidth;
    } else {
      box.lo[a] = mn - margin * range;
      box.hi[a] = mx + margin * range;
    }
  }
  return box;
}

AugmentedDataSet::AugmentedDataSet(const DataSet& sample, std::size_t artificial_count,
                                   std::uint64_t seed, Box domain)
    : all_(sample), sample_count_(sample.size()), seed_(seed), domain_(std::move(domain)) {
  if (domain_.dim() != sample.dim()) fail(Errc::dimension_mismatch, "domain dimension does not match sample");
  if (artificial_count == 0) return;

  const std::size_t d = sample.dim();
  std::vector<double> coords(sample.flat().begin(), sample.flat().end());
  coords.reserve((sample.size() + artificial_count) * d);
  Rng rng(seed);
  for (std::size_t i = 0; i < artificial_count; ++i)
    for (std::size_t a = 0; a < d; ++a) coords.push_back(rng.uniform(domain_.lo[a], domain_.hi[a]));
  all_ = DataSet(std::move(coords), d);
}

std::optional<DataSet> AugmentedDataSet::artificial_points() const {
  if (artificial_count() == 0) return std::nullopt;
  const auto flat = all_.flat();
  std::vector<double> coords(flat.begin() + sample_count_ * all_.dim(), flat.end());
  return DataSet(std::move(coords), all_.dim());
}

AugmentedDataSet augment(const DataSet& sample, std::size_t count, std::uint64_t seed, const Box& domain) {
  return AugmentedDataSet(sample, count, seed, domain);
}

} // namespace abcdepth
