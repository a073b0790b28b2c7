// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_HULL_HPP
#define ABCDEPTH_HULL_HPP

#include <array>
#include <vector>

#include "abcdepth/dataset.hpp"
#include "abcdepth/engine.hpp"

namespace abcdepth {

// Convex hull of a level's members, counter-clockwise, starting at the
// lexicographically smallest vertex. Collinear boundary points are dropped.
// A single distinct point yields one vertex, a collinear set its two
// endpoints. Only d = 2 is supported.
std::vector<std::array<double, 2>> contour_2d(const LevelSet& level, const DataSet& candidates);

// Hull of an arbitrary 2-D point list, same conventions.
std::vector<std::array<double, 2>> convex_hull_2d(std::vector<std::array<double, 2>> points);

} // namespace abcdepth

#endif
