// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef ABCDEPTH_IO_HPP
#define ABCDEPTH_IO_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abcdepth/augment.hpp"
#include "abcdepth/dataset.hpp"
#include "abcdepth/engine.hpp"
#include "abcdepth/rng.hpp"
#include "abcdepth/version.hpp"

namespace abcdepth {

// Point files: comma-separated decimals, LF or CRLF, one point per row, with
// an optional single header row recognized by failing to parse as numbers.
DataSet read_points_csv(std::istream& in);
DataSet read_points_csv_file(const std::string& path);
DataSet read_points_csv_text(const std::string& text);

// Shortest-round-trip decimals; no header.
void write_points_csv(const DataSet& data, std::ostream& out);
std::string points_csv_text(const DataSet& data);

// Same, plus a trailing 0/1 column marking artificial points; header row
// x0,..,x{d-1},artificial.
void write_augmented_csv(const AugmentedDataSet& augmented, std::ostream& out);

struct RunMeta {
  std::string tool = kToolName;
  std::string version = kVersion;
  std::string command;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t artificial = 0;
  std::uint64_t seed = 0;
  double margin = 0.0;
  std::string generator = Rng::kGeneratorId;
  std::string normal_transform = Rng::kNormalTransformId;
  double elapsed_seconds = 0.0;

  friend bool operator==(const RunMeta&, const RunMeta&) = default;
};

// Indices in serialized documents are 1-based to match the row numbering a
// reader sees in the CSV inputs; in-memory indices stay 0-based.
struct MemberRecord {
  std::size_t index = 0; // 1-based candidate index
  bool artificial = false;
  std::vector<double> point;

  friend bool operator==(const MemberRecord&, const MemberRecord&) = default;
};

struct MedianPayload {
  std::int64_t depth_num = 0;
  std::int64_t depth_den = 1;
  std::size_t iterations = 0;
  std::vector<MemberRecord> members;

  friend bool operator==(const MedianPayload&, const MedianPayload&) = default;
};

struct DepthPayload {
  std::string mode; // "sample" or "out_of_sample"
  std::optional<std::size_t> index; // 1-based, sample mode only
  std::vector<double> point;
  std::int64_t depth_num = 0;
  std::int64_t depth_den = 1;
  std::int64_t exit_ball_size = 0;
  std::size_t iterations = 0;

  friend bool operator==(const DepthPayload&, const DepthPayload&) = default;
};

struct LevelRecord {
  std::int64_t alpha_num = 0;
  std::int64_t alpha_den = 1;
  std::int64_t ball_size = 0;
  std::vector<MemberRecord> members;

  friend bool operator==(const LevelRecord&, const LevelRecord&) = default;
};

struct LevelSetsPayload {
  std::vector<LevelRecord> levels;

  friend bool operator==(const LevelSetsPayload&, const LevelSetsPayload&) = default;
};

struct ContourPayload {
  std::int64_t alpha_num = 0;
  std::int64_t alpha_den = 1;
  std::vector<std::array<double, 2>> vertices;

  friend bool operator==(const ContourPayload&, const ContourPayload&) = default;
};

struct ResultDocument {
  RunMeta meta;
  std::variant<MedianPayload, DepthPayload, LevelSetsPayload, ContourPayload> payload;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

MedianPayload make_median_payload(const MedianResult& result);
LevelSetsPayload make_levelsets_payload(const MedianResult& result);
DepthPayload make_depth_payload(const DepthResult& result,
                                std::optional<std::size_t> sample_index = std::nullopt);
ContourPayload make_contour_payload(const LevelSet& level,
                                    const std::vector<std::array<double, 2>>& vertices);

// Stable key order, fixed float formatting: identical documents serialize to
// identical bytes.
void write_result_json(const ResultDocument& doc, std::ostream& out);
std::string result_json_text(const ResultDocument& doc);
ResultDocument parse_result_json(const std::string& text);

// Flat tabular rendering of the same payloads.
std::string result_csv_text(const ResultDocument& doc);

} // namespace abcdepth

#endif
