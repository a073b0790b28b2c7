// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "abcdepth/error.hpp"
#include "abcdepth/oracle.hpp"
#include "abcdepth/rng.hpp"

using namespace abcdepth;

namespace {

DataSet random_2d(Rng& rng, std::size_t n, double scale = 3.0) {
  std::vector<double> coords(n * 2);
  for (double& c : coords) c = rng.uniform(-scale, scale);
  return DataSet(std::move(coords), 2);
}

} // namespace

TEST_CASE("1-D depth counts both closed sides") {
  const std::vector<double> v{1.0, 2.0, 3.0};
  CHECK(exact_depth_1d(v, 2.0) == DepthValue{2, 3});
  CHECK(exact_depth_1d(v, 0.0) == DepthValue{0, 3});
  CHECK(exact_depth_1d(v, 4.0) == DepthValue{0, 3});
  CHECK(exact_depth_1d(v, 1.0) == DepthValue{1, 3});
  const std::vector<double> ties{5.0, 5.0, 5.0};
  CHECK(exact_depth_1d(ties, 5.0) == DepthValue{3, 3});
}

TEST_CASE("planar depth on hand-checked figures") {
  const DataSet square = DataSet::from_rows({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
  CHECK(exact_depth_2d(square, std::vector<double>{0.5, 0.5}) == DepthValue{2, 4});
  CHECK(exact_depth_2d(square, std::vector<double>{0.0, 0.0}) == DepthValue{1, 4});

  const DataSet tri = DataSet::from_rows({{0.0, 1.0}, {-1.0, 0.0}, {1.0, 0.0}});
  CHECK(exact_depth_2d(tri, std::vector<double>{0.0, 1.0}) == DepthValue{1, 3});
  CHECK(exact_depth_2d(tri, std::vector<double>{0.0, 0.25}) == DepthValue{1, 3});
  CHECK(exact_depth_2d(tri, std::vector<double>{10.0, 10.0}) == DepthValue{0, 3});

  // Points on a halfplane boundary count for both closed sides.
  const DataSet cross = DataSet::from_rows({{-1.0, 0.0}, {1.0, 0.0}, {0.0, -1.0}, {0.0, 1.0}, {0.0, 0.0}});
  CHECK(exact_depth_2d(cross, std::vector<double>{0.0, 0.0}) == DepthValue{3, 5});
}

TEST_CASE("planar depth handles coincident points") {
  const DataSet data = DataSet::from_rows({{0.0, 0.0}, {0.0, 0.0}, {2.0, 0.0}});
  CHECK(exact_depth_2d(data, std::vector<double>{0.0, 0.0}) == DepthValue{2, 3});
  const DataSet one = DataSet::from_rows({{4.0, 5.0}});
  CHECK(exact_depth_2d(one, std::vector<double>{4.0, 5.0}) == DepthValue{1, 1});
}

TEST_CASE("brute-force depth on hand-checked solids") {
  const DataSet tetra =
      DataSet::from_rows({{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}});
  CHECK(exact_depth_smalld(tetra, std::vector<double>{0.25, 0.25, 0.25}) == DepthValue{1, 4});
  CHECK(exact_depth_smalld(tetra, std::vector<double>{0.0, 0.0, 0.0}) == DepthValue{1, 4});
  CHECK(exact_depth_smalld(tetra, std::vector<double>{5.0, 5.0, 5.0}) == DepthValue{0, 4});

  // Octahedron vertices: the center is covered by 2 vertices in the worst
  // closed halfspace through it (any supporting plane of a face misses 3).
  const DataSet octa = DataSet::from_rows({{1.0, 0.0, 0.0},
                                           {-1.0, 0.0, 0.0},
                                           {0.0, 1.0, 0.0},
                                           {0.0, -1.0, 0.0},
                                           {0.0, 0.0, 1.0},
                                           {0.0, 0.0, -1.0}});
  CHECK(exact_depth_smalld(octa, std::vector<double>{0.0, 0.0, 0.0}) == DepthValue{3, 6});

  const DataSet single = DataSet::from_rows({{2.0}});
  CHECK(exact_depth_smalld(single, std::vector<double>{2.0}) == DepthValue{1, 1});
}

TEST_CASE("brute-force depth refuses oversized instances") {
  Rng rng(1);
  std::vector<double> coords(26 * 2);
  for (double& c : coords) c = rng.uniform01();
  CHECK_THROWS_AS(exact_depth_smalld(DataSet(std::move(coords), 2), std::vector<double>{0.0, 0.0}),
                  Error);
  std::vector<double> coords4(10 * 4);
  for (double& c : coords4) c = rng.uniform01();
  CHECK_THROWS_AS(
      exact_depth_smalld(DataSet(std::move(coords4), 4), std::vector<double>{0.0, 0.0, 0.0, 0.0}),
      Error);
}

TEST_CASE("the two planar oracles agree on random instances") {
  Rng rng(31337);
  for (int trial = 0; trial < 220; ++trial) {
    const std::size_t n = 1 + rng.next_u64() % 25;
    DataSet data = random_2d(rng, n);
    // Mix in duplicates and collinear runs so ties get exercised.
    if (n >= 3 && trial % 4 == 0) {
      std::vector<double> coords(data.flat().begin(), data.flat().end());
      coords[2] = coords[0];
      coords[3] = coords[1];
      const double t = rng.uniform01();
      coords[4] = coords[0] + t * 2.0;
      coords[5] = coords[1] + t * 2.0;
      data = DataSet(std::move(coords), 2);
    }
    for (int q = 0; q < 3; ++q) {
      std::vector<double> x;
      if (q == 0) {
        const std::size_t i = rng.next_u64() % n;
        x.assign(data.point(i).begin(), data.point(i).end());
      } else {
        x = {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
      }
      const DepthValue sweep = exact_depth_2d(data, x);
      const DepthValue brute = exact_depth_smalld(data, x);
      REQUIRE(sweep == brute);
    }
  }
}

TEST_CASE("planar depth of collinear data reduces to the 1-D depth") {
  Rng rng(88);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.next_u64() % 20;
    // Integer parameters keep the points exactly on the line.
    double ux = 0.0, uy = 0.0;
    while (ux == 0.0 && uy == 0.0) {
      ux = static_cast<double>(static_cast<std::int64_t>(rng.next_u64() % 19) - 9);
      uy = static_cast<double>(static_cast<std::int64_t>(rng.next_u64() % 19) - 9);
    }
    std::vector<double> ts(n);
    std::vector<double> coords(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
      ts[i] = static_cast<double>(static_cast<std::int64_t>(rng.next_u64() % 101) - 50);
      coords[2 * i] = ts[i] * ux;
      coords[2 * i + 1] = ts[i] * uy;
    }
    const double t = ts[rng.next_u64() % n];
    const DataSet line(std::move(coords), 2);
    const DepthValue planar = exact_depth_2d(line, std::vector<double>{t * ux, t * uy});
    const DepthValue axis = exact_depth_1d(ts, t);
    CHECK(planar == axis);
  }
}

TEST_CASE("some point in the plane always reaches depth about one third") {
  Rng rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng.next_u64() % 23;
    const DataSet data = random_2d(rng, n);
    std::int64_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      best = std::max(best, exact_depth_2d(data, data.point(i)).num);
    }
    double lo[2] = {1e300, 1e300}, hi[2] = {-1e300, -1e300};
    for (std::size_t i = 0; i < n; ++i) {
      for (int a = 0; a < 2; ++a) {
        lo[a] = std::min(lo[a], data.coord(i, a));
        hi[a] = std::max(hi[a], data.coord(i, a));
      }
    }
    for (int gx = 0; gx < 50; ++gx) {
      for (int gy = 0; gy < 50; ++gy) {
        const std::vector<double> x{lo[0] + (hi[0] - lo[0]) * gx / 49.0,
                                    lo[1] + (hi[1] - lo[1]) * gy / 49.0};
        best = std::max(best, exact_depth_2d(data, x).num);
      }
    }
    // Guaranteed depth 1/(d+1) for the best point, minus grid slack 1/n.
    const auto needed = static_cast<std::int64_t>((n + 2) / 3) - 1;
    CHECK(best >= needed);
  }
}

TEST_CASE("direction sets are unit length and carry provenance") {
  const DirectionSet sampled = DirectionSet::sampled_uniform(500, 3, 77);
  CHECK(sampled.count() == 500);
  CHECK(sampled.dim() == 3);
  CHECK(sampled.provenance() == DirectionSet::Provenance::sampled_uniform);
  for (std::size_t i = 0; i < sampled.count(); ++i) {
    double s = 0.0;
    for (double c : sampled.at(i)) s += c * c;
    CHECK(std::abs(std::sqrt(s) - 1.0) <= 1e-12);
  }

  const DataSet tri = DataSet::from_rows({{0.0, 1.0}, {-1.0, 0.0}, {1.0, 0.0}});
  const DirectionSet pair = DirectionSet::pairwise(tri);
  CHECK(pair.provenance() == DirectionSet::Provenance::pairwise);
  for (std::size_t i = 0; i < pair.count(); ++i) {
    double s = 0.0;
    for (double c : pair.at(i)) s += c * c;
    CHECK(std::abs(std::sqrt(s) - 1.0) <= 1e-12);
  }

  const DataSet same = DataSet::from_rows({{1.0, 1.0}, {1.0, 1.0}});
  CHECK_THROWS_AS(DirectionSet::pairwise(same), Error);
}

TEST_CASE("projection counts bound the exact depth from above") {
  const DataSet square = DataSet::from_rows({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
  const DirectionSet axes = DirectionSet::from_raw({1.0, 0.0, -1.0, 0.0, 0.0, 1.0, 0.0, -1.0}, 2);
  // Axis-aligned bound at the center: each halfplane holds 2 corners.
  CHECK(direction_upper_bound(square, std::vector<double>{0.5, 0.5}, axes) == DepthValue{2, 4});
  // An extreme sample point along a direction counts itself.
  CHECK(direction_upper_bound(square, std::vector<double>{0.0, 0.0}, axes) == DepthValue{2, 4});

  Rng rng(2718);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + rng.next_u64() % 24;
    const DataSet data = random_2d(rng, n);
    const std::size_t i = rng.next_u64() % n;
    const std::vector<double> x(data.point(i).begin(), data.point(i).end());
    const DepthValue exact = exact_depth_2d(data, x);
    const DepthValue sampled = direction_upper_bound(data, x, DirectionSet::sampled_uniform(64, 2, trial));
    CHECK(sampled.num >= exact.num);
    // Pairwise normals include every optimal boundary direction.
    const DepthValue tight = direction_upper_bound(data, x, DirectionSet::pairwise(data));
    CHECK(tight == exact);
  }
}
