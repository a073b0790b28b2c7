// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_ERROR_HPP
#define ABCDEPTH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace abcdepth {

enum class Errc {
  invalid_argument,
  dimension_mismatch,
  parse,
  io,
  unsupported,
  cost_guard,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace abcdepth

#endif
