// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_RNG_HPP
#define ABCDEPTH_RNG_HPP

#include <cstdint>
#include <random>

namespace abcdepth {

// Seeded random stream used everywhere randomness is needed. Built on the
// fully specified mt19937_64 engine with fixed output transforms, so a seed
// pins the exact sequence independent of the standard library's distribution
// implementations.
class Rng {
public:
  static constexpr const char* kGeneratorId = "mt19937_64";
  static constexpr const char* kNormalTransformId = "marsaglia_polar";

  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) from the top 53 bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Standard normal via the polar method; consumes pairs, caches the spare.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

} // namespace abcdepth

#endif
