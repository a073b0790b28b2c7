// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_VERSION_HPP
#define ABCDEPTH_VERSION_HPP

namespace abcdepth {

inline constexpr const char* kToolName = "abcdepth";
inline constexpr const char* kVersion = "0.1.0";

} // namespace abcdepth

#endif
