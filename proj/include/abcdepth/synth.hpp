// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_SYNTH_HPP
#define ABCDEPTH_SYNTH_HPP

#include <cstdint>
#include <string>

#include "abcdepth/dataset.hpp"

namespace abcdepth {

enum class Distribution {
  normal,   // standard normal, independent coordinates
  ring,     // uniform on an annulus, 2-D only
  triangle, // the fixed 3-point set (0,1), (-1,0), (1,0)
};

Distribution distribution_from_name(const std::string& name);
const char* distribution_name(Distribution kind);

struct GeneratorSpec {
  Distribution kind = Distribution::normal;
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  double ring_inner = 1.0;
  double ring_outer = 2.0;
};

DataSet generate(const GeneratorSpec& spec);

} // namespace abcdepth

#endif
