// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#include "abcdepth/synth.hpp"

#include <cmath>
#include <numbers>

#include "abcdepth/error.hpp"
#include "abcdepth/rng.hpp"

namespace abcdepth {

Distribution distribution_from_name(const std::string& name) {
  if (name == "normal") return Distribution::normal;
  if (name == "ring") return Distribution::ring;
  if (name == "triangle") return Distribution::triangle;
  fail(Errc::invalid_argument, "unknown distribution '" + name + "'");
}

const char* distribution_name(Distribution kind) {
  switch (kind) {
    case Distribution::normal: return "normal";
    case Distribution::ring: return "ring";
    case Distribution::triangle: return "triangle";
  }
  return "?";
}

namespace {

DataSet generate_normal(const GeneratorSpec& spec) {
  if (spec.n < 1 || spec.d < 1)
    fail(Errc::invalid_argument, "normal generator needs n >= 1 and d >= 1");
  Rng rng(spec.seed);
  std::vector<double> coords(spec.n * spec.d);
  for (double& c : coords) c = rng.normal();
  return DataSet(std::move(coords), spec.d);
}

DataSet generate_ring(const GeneratorSpec& spec) {
  if (spec.n < 1) fail(Errc::invalid_argument, "ring generator needs n >= 1");
  if (spec.d != 2) fail(Errc::invalid_argument, "ring generator is 2-D only");
  if (!(spec.ring_inner > 0.0) || !(spec.ring_outer > spec.ring_inner))
    fail(Errc::invalid_argument, "ring radii must satisfy 0 < inner < outer");
  const double r1sq = spec.ring_inner * spec.ring_inner;
  const double r2sq = spec.ring_outer * spec.ring_outer;
  Rng rng(spec.seed);
  std::vector<double> coords;
  coords.reserve(spec.n * 2);
  for (std::size_t i = 0; i < spec.n; ++i) {
    // Radius by inverting the area CDF keeps the density uniform over the annulus.
    const double r = std::sqrt(r1sq + rng.uniform01() * (r2sq - r1sq));
    const double theta = 2.0 * std::numbers::pi * rng.uniform01();
    coords.push_back(r * std::cos(theta));
    coords.push_back(r * std::sin(theta));
  }
  return DataSet(std::move(coords), 2);
}

DataSet generate_triangle(const GeneratorSpec& spec) {
  if ((spec.n != 0 && spec.n != 3) || (spec.d != 0 && spec.d != 2))
    fail(Errc::invalid_argument, "triangle generator is a fixed 3-point 2-D set");
  return DataSet({0.0, 1.0, -1.0, 0.0, 1.0, 0.0}, 2);
}

} // namespace

DataSet generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case Distribution::normal: return generate_normal(spec);
    case Distribution::ring: return generate_ring(spec);
    case Distribution::triangle: return generate_triangle(spec);
  }
  fail(Errc::invalid_argument, "unknown generator kind");
}

} // namespace abcdepth
