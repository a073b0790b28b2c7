// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
#include "abcdepth/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"

#include "abcdepth/error.hpp"

namespace abcdepth {
namespace {

using ojson = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view field, double& out) {
  field = trim(field);
  if (field.empty()) return false;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

// Splits one CSV line; returns false on the first unparsable field, reporting
// its 1-based column in bad_column.
bool parse_row(std::string_view line, std::vector<double>& out, std::size_t& bad_column) {
  out.clear();
  std::size_t column = 1;
  while (true) {
    const std::size_t comma = line.find(',');
    const std::string_view field = comma == std::string_view::npos ? line : line.substr(0, comma);
    double value = 0.0;
    if (!parse_double(field, value) || !std::isfinite(value)) {
      bad_column = column;
      return false;
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
    ++column;
  }
  return true;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

ojson fraction_json(std::int64_t num, std::int64_t den) {
  ojson j;
  j["numerator"] = num;
  j["denominator"] = den;
  j["value"] = static_cast<double>(num) / static_cast<double>(den);
  return j;
}

ojson member_json(const MemberRecord& m) {
  ojson j;
  j["index"] = m.index;
  j["source"] = m.artificial ? "artificial" : "sample";
  j["point"] = m.point;
  return j;
}

MemberRecord member_from_json(const nlohmann::json& j) {
  MemberRecord m;
  m.index = j.at("index").get<std::size_t>();
  m.artificial = j.at("source").get<std::string>() == "artificial";
  m.point = j.at("point").get<std::vector<double>>();
  return m;
}

std::vector<MemberRecord> members_from_result(const MedianResult& result,
                                              const std::vector<std::size_t>& indices) {
  std::vector<MemberRecord> members;
  members.reserve(indices.size());
  for (std::size_t idx : indices) {
    MemberRecord m;
    m.index = idx + 1;
    m.artificial = idx >= result.sample_count;
    const auto p = result.candidates.point(idx);
    m.point.assign(p.begin(), p.end());
    members.push_back(std::move(m));
  }
  return members;
}

void append_member_csv(std::string& out, const MemberRecord& m) {
  out += std::to_string(m.index);
  out += ',';
  out += m.artificial ? "artificial" : "sample";
  for (double v : m.point) {
    out += ',';
    out += format_double(v);
  }
  out += '\n';
}

std::string coord_header(std::size_t d) {
  std::string h;
  for (std::size_t a = 0; a < d; ++a) {
    h += ",x" + std::to_string(a);
  }
  return h;
}

} // namespace

DataSet read_points_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  std::size_t expected_width = 0;
  bool header_allowed = true;
  std::vector<double> row;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    std::size_t bad_column = 0;
    if (!parse_row(line, row, bad_column)) {
      if (header_allowed) {
        header_allowed = false;
        continue;
      }
      fail(Errc::parse, "row " + std::to_string(line_number) + ", column " +
                            std::to_string(bad_column) + ": not a finite number");
    }
    header_allowed = false;
    if (expected_width == 0) {
      expected_width = row.size();
    } else if (row.size() != expected_width) {
      fail(Errc::parse, "row " + std::to_string(line_number) + " has " +
                            std::to_string(row.size()) + " fields, expected " +
                            std::to_string(expected_width));
    }
    rows.push_back(row);
  }
  if (rows.empty()) {
    fail(Errc::io, "empty input: no data rows");
  }
  return DataSet::from_rows(rows);
}

DataSet read_points_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(Errc::io, "cannot open '" + path + "' for reading");
  }
  return read_points_csv(in);
}

DataSet read_points_csv_text(const std::string& text) {
  std::istringstream in(text);
  return read_points_csv(in);
}

void write_points_csv(const DataSet& data, std::ostream& out) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto p = data.point(i);
    for (std::size_t a = 0; a < p.size(); ++a) {
      if (a) out << ',';
      out << format_double(p[a]);
    }
    out << '\n';
  }
}

std::string points_csv_text(const DataSet& data) {
  std::ostringstream out;
  write_points_csv(data, out);
  return out.str();
}

void write_augmented_csv(const AugmentedDataSet& augmented, std::ostream& out) {
  const DataSet& all = augmented.all();
  const std::string header = coord_header(all.dim());
  out << header.substr(1) << ",artificial\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto p = all.point(i);
    for (double v : p) {
      out << format_double(v) << ',';
    }
    out << (augmented.is_artificial(i) ? '1' : '0') << '\n';
  }
}

MedianPayload make_median_payload(const MedianResult& result) {
  MedianPayload payload;
  payload.depth_num = result.depth_num;
  payload.depth_den = result.depth_den;
  payload.iterations = result.iterations;
  payload.members = members_from_result(result, result.median_indices);
  return payload;
}

LevelSetsPayload make_levelsets_payload(const MedianResult& result) {
  LevelSetsPayload payload;
  payload.levels.reserve(result.levels.size());
  for (const LevelSet& level : result.levels) {
    LevelRecord record;
    record.alpha_num = level.alpha_num;
    record.alpha_den = level.alpha_den;
    record.ball_size = level.ball_size;
    record.members = members_from_result(result, level.members);
    payload.levels.push_back(std::move(record));
  }
  return payload;
}

DepthPayload make_depth_payload(const DepthResult& result, std::optional<std::size_t> sample_index) {
  DepthPayload payload;
  payload.mode = result.mode == DepthMode::sample_point ? "sample" : "out_of_sample";
  if (sample_index) payload.index = *sample_index + 1;
  payload.point = result.point;
  payload.depth_num = result.depth_num;
  payload.depth_den = result.depth_den;
  payload.exit_ball_size = result.exit_ball_size;
  payload.iterations = result.iterations;
  return payload;
}

ContourPayload make_contour_payload(const LevelSet& level,
                                    const std::vector<std::array<double, 2>>& vertices) {
  ContourPayload payload;
  payload.alpha_num = level.alpha_num;
  payload.alpha_den = level.alpha_den;
  payload.vertices = vertices;
  return payload;
}

void write_result_json(const ResultDocument& doc, std::ostream& out) {
  out << result_json_text(doc);
}

std::string result_json_text(const ResultDocument& doc) {
  ojson j;
  ojson& meta = j["meta"];
  meta["tool"] = doc.meta.tool;
  meta["version"] = doc.meta.version;
  meta["command"] = doc.meta.command;
  meta["n"] = doc.meta.n;
  meta["d"] = doc.meta.d;
  meta["artificial"] = doc.meta.artificial;
  meta["seed"] = doc.meta.seed;
  meta["margin"] = doc.meta.margin;
  meta["rng"]["generator"] = doc.meta.generator;
  meta["rng"]["normal_transform"] = doc.meta.normal_transform;
  meta["elapsed_seconds"] = doc.meta.elapsed_seconds;

  if (const auto* median = std::get_if<MedianPayload>(&doc.payload)) {
    ojson& m = j["median"];
    m["depth"] = fraction_json(median->depth_num, median->depth_den);
    m["iterations"] = median->iterations;
    m["member_count"] = median->members.size();
    ojson arr = ojson::array();
    for (const auto& member : median->members) arr.push_back(member_json(member));
    m["members"] = std::move(arr);
  } else if (const auto* depth = std::get_if<DepthPayload>(&doc.payload)) {
    ojson& p = j["depth"];
    p["mode"] = depth->mode;
    if (depth->index) p["index"] = *depth->index;
    p["point"] = depth->point;
    p["depth"] = fraction_json(depth->depth_num, depth->depth_den);
    p["exit_ball_size"] = depth->exit_ball_size;
    p["iterations"] = depth->iterations;
  } else if (const auto* levels = std::get_if<LevelSetsPayload>(&doc.payload)) {
    ojson arr = ojson::array();
    for (const auto& level : levels->levels) {
      ojson l;
      l["alpha"] = fraction_json(level.alpha_num, level.alpha_den);
      l["ball_size"] = level.ball_size;
      l["member_count"] = level.members.size();
      ojson ms = ojson::array();
      for (const auto& member : level.members) ms.push_back(member_json(member));
      l["members"] = std::move(ms);
      arr.push_back(std::move(l));
    }
    j["levels"] = std::move(arr);
  } else if (const auto* contour = std::get_if<ContourPayload>(&doc.payload)) {
    ojson& c = j["contour"];
    c["alpha"] = fraction_json(contour->alpha_num, contour->alpha_den);
    c["vertex_count"] = contour->vertices.size();
    ojson vs = ojson::array();
    for (const auto& v : contour->vertices) vs.push_back(std::vector<double>{v[0], v[1]});
    c["vertices"] = std::move(vs);
  }
  return j.dump(2) + "\n";
}

ResultDocument parse_result_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::parse, std::string("invalid result document: ") + e.what());
  }
  try {
    ResultDocument doc;
    const auto& meta = j.at("meta");
    doc.meta.tool = meta.at("tool").get<std::string>();
    doc.meta.version = meta.at("version").get<std::string>();
    doc.meta.command = meta.at("command").get<std::string>();
    doc.meta.n = meta.at("n").get<std::size_t>();
    doc.meta.d = meta.at("d").get<std::size_t>();
    doc.meta.artificial = meta.at("artificial").get<std::size_t>();
    doc.meta.seed = meta.at("seed").get<std::uint64_t>();
    doc.meta.margin = meta.at("margin").get<double>();
    doc.meta.generator = meta.at("rng").at("generator").get<std::string>();
    doc.meta.normal_transform = meta.at("rng").at("normal_transform").get<std::string>();
    doc.meta.elapsed_seconds = meta.at("elapsed_seconds").get<double>();

    if (j.contains("median")) {
      const auto& m = j.at("median");
      MedianPayload payload;
      payload.depth_num = m.at("depth").at("numerator").get<std::int64_t>();
      payload.depth_den = m.at("depth").at("denominator").get<std::int64_t>();
      payload.iterations = m.at("iterations").get<std::size_t>();
      for (const auto& member : m.at("members")) payload.members.push_back(member_from_json(member));
      doc.payload = std::move(payload);
    } else if (j.contains("depth")) {
      const auto& p = j.at("depth");
      DepthPayload payload;
      payload.mode = p.at("mode").get<std::string>();
      if (p.contains("index")) payload.index = p.at("index").get<std::size_t>();
      payload.point = p.at("point").get<std::vector<double>>();
      payload.depth_num = p.at("depth").at("numerator").get<std::int64_t>();
      payload.depth_den = p.at("depth").at("denominator").get<std::int64_t>();
      payload.exit_ball_size = p.at("exit_ball_size").get<std::int64_t>();
      payload.iterations = p.at("iterations").get<std::size_t>();
      doc.payload = std::move(payload);
    } else if (j.contains("levels")) {
      LevelSetsPayload payload;
      for (const auto& l : j.at("levels")) {
        LevelRecord record;
        record.alpha_num = l.at("alpha").at("numerator").get<std::int64_t>();
        record.alpha_den = l.at("alpha").at("denominator").get<std::int64_t>();
        record.ball_size = l.at("ball_size").get<std::int64_t>();
        for (const auto& member : l.at("members")) record.members.push_back(member_from_json(member));
        payload.levels.push_back(std::move(record));
      }
      doc.payload = std::move(payload);
    } else if (j.contains("contour")) {
      const auto& c = j.at("contour");
      ContourPayload payload;
      payload.alpha_num = c.at("alpha").at("numerator").get<std::int64_t>();
      payload.alpha_den = c.at("alpha").at("denominator").get<std::int64_t>();
      for (const auto& v : c.at("vertices")) {
        const auto coords = v.get<std::vector<double>>();
        if (coords.size() != 2) fail(Errc::parse, "contour vertex is not a pair");
        payload.vertices.push_back({coords[0], coords[1]});
      }
      doc.payload = std::move(payload);
    } else {
      fail(Errc::parse, "result document has no recognized payload");
    }
    return doc;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::parse, std::string("malformed result document: ") + e.what());
  }
}

std::string result_csv_text(const ResultDocument& doc) {
  std::string out;
  if (const auto* median = std::get_if<MedianPayload>(&doc.payload)) {
    out += "depth_num,depth_den,index,source" + coord_header(doc.meta.d) + "\n";
    for (const auto& member : median->members) {
      out += std::to_string(median->depth_num) + ',' + std::to_string(median->depth_den) + ',';
      append_member_csv(out, member);
    }
  } else if (const auto* depth = std::get_if<DepthPayload>(&doc.payload)) {
    out += "mode,index,depth_num,depth_den,exit_ball_size,iterations" + coord_header(doc.meta.d) +
           "\n";
    out += depth->mode + ',';
    out += depth->index ? std::to_string(*depth->index) : std::string("-");
    out += ',' + std::to_string(depth->depth_num) + ',' + std::to_string(depth->depth_den);
    out += ',' + std::to_string(depth->exit_ball_size) + ',' + std::to_string(depth->iterations);
    for (double v : depth->point) out += ',' + format_double(v);
    out += '\n';
  } else if (const auto* levels = std::get_if<LevelSetsPayload>(&doc.payload)) {
    out += "alpha_num,alpha_den,ball_size,index,source" + coord_header(doc.meta.d) + "\n";
    for (const auto& level : levels->levels) {
      for (const auto& member : level.members) {
        out += std::to_string(level.alpha_num) + ',' + std::to_string(level.alpha_den) + ',' +
               std::to_string(level.ball_size) + ',';
        append_member_csv(out, member);
      }
    }
  } else if (const auto* contour = std::get_if<ContourPayload>(&doc.payload)) {
    out += "x0,x1\n";
    for (const auto& v : contour->vertices) {
      out += format_double(v[0]) + ',' + format_double(v[1]) + '\n';
    }
  }
  return out;
}

} // namespace abcdepth
