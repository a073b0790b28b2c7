// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library exclusively through the C API.
#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "abcdepth/abcdepth.h"

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct DatasetDeleter {
  void operator()(abcd_dataset* d) const { abcd_dataset_free(d); }
};
struct ResultDeleter {
  void operator()(abcd_result* r) const { abcd_result_free(r); }
};
using DatasetPtr = std::unique_ptr<abcd_dataset, DatasetDeleter>;
using ResultPtr = std::unique_ptr<abcd_result, ResultDeleter>;

int fail_compute(const std::string& context) {
  std::cerr << "error: " << context << ": " << abcd_last_error_message() << "\n";
  return kExitComputation;
}

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

// --input PATH, or piped stdin when the flag is absent.
int load_input(const std::string& input_path, DatasetPtr& out) {
  abcd_dataset* raw = nullptr;
  if (!input_path.empty()) {
    if (abcd_dataset_from_csv_file(input_path.c_str(), &raw) != ABCD_OK) {
      return fail_compute("reading '" + input_path + "'");
    }
  } else {
    if (isatty(fileno(stdin))) {
      return fail_usage("no --input given and stdin is a terminal");
    }
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    if (abcd_dataset_from_csv_text(buffer.str().c_str(), &raw) != ABCD_OK) {
      return fail_compute("reading stdin");
    }
  }
  out.reset(raw);
  return 0;
}

int write_output(const std::string& output_path, const std::string& text) {
  if (output_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "error: cannot open '" << output_path << "' for writing\n";
    return kExitComputation;
  }
  out << text;
  return 0;
}

int parse_point(const std::string& text, std::vector<double>& out) {
  out.clear();
  std::string_view rest = text;
  while (true) {
    const std::size_t comma = rest.find(',');
    std::string_view field = comma == std::string_view::npos ? rest : rest.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
      return fail_usage("--point: cannot parse coordinate '" + std::string(field) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return 0;
}

struct CommonOpts {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string dump_augmented;
  abcd_options options{};
};

void add_engine_flags(CLI::App* cmd, CommonOpts& opts) {
  abcd_options_init(&opts.options);
  cmd->add_option("--input", opts.input, "CSV file of points; stdin when omitted");
  cmd->add_option("--output", opts.output, "write the result here instead of stdout");
  cmd->add_option("--artificial", opts.options.artificial_count,
                  "number of artificial points to add");
  cmd->add_option("--seed", opts.options.seed, "seed for artificial points");
  cmd->add_option("--margin", opts.options.margin, "bounding-box margin (fraction of range)");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--dump-augmented", opts.dump_augmented,
                  "also write the augmented point set (CSV with an artificial column) here");
}

int dump_augmented_if_requested(const CommonOpts& opts, const abcd_dataset* dataset) {
  if (opts.dump_augmented.empty()) return 0;
  char* text = nullptr;
  if (abcd_dataset_augmented_csv(dataset, &opts.options, &text) != ABCD_OK) {
    return fail_compute("writing augmented set");
  }
  const int rc = write_output(opts.dump_augmented, text);
  abcd_string_free(text);
  return rc;
}

int emit_result(const CommonOpts& opts, const abcd_result* result) {
  char* text = nullptr;
  const abcd_status status = opts.format == "csv" ? abcd_result_to_csv(result, &text)
                                                  : abcd_result_to_json(result, &text);
  if (status != ABCD_OK) return fail_compute("serializing result");
  const int rc = write_output(opts.output, text);
  abcd_string_free(text);
  return rc;
}

using ComputeFn = abcd_status (*)(const abcd_dataset*, const abcd_options*, abcd_result**);

int run_pipeline(const CommonOpts& opts, ComputeFn compute, const char* what) {
  DatasetPtr dataset;
  if (const int rc = load_input(opts.input, dataset)) return rc;
  abcd_result* raw = nullptr;
  if (compute(dataset.get(), &opts.options, &raw) != ABCD_OK) return fail_compute(what);
  ResultPtr result(raw);
  if (const int rc = dump_augmented_if_requested(opts, dataset.get())) return rc;
  return emit_result(opts, result.get());
}

int run_depth(const CommonOpts& opts, const std::string& point_text, std::int64_t index_1based) {
  const bool has_point = !point_text.empty();
  const bool has_index = index_1based > 0;
  if (has_point == has_index) {
    return fail_usage("depth needs exactly one of --point or --index");
  }
  DatasetPtr dataset;
  if (const int rc = load_input(opts.input, dataset)) return rc;
  abcd_result* raw = nullptr;
  if (has_index) {
    const auto index = static_cast<size_t>(index_1based - 1);
    if (abcd_depth_of_sample(dataset.get(), &opts.options, index, &raw) != ABCD_OK) {
      return fail_compute("computing depth");
    }
  } else {
    std::vector<double> point;
    if (const int rc = parse_point(point_text, point)) return rc;
    if (abcd_depth_of_point(dataset.get(), &opts.options, point.data(), point.size(), &raw) !=
        ABCD_OK) {
      return fail_compute("computing depth");
    }
  }
  ResultPtr result(raw);
  if (const int rc = dump_augmented_if_requested(opts, dataset.get())) return rc;
  return emit_result(opts, result.get());
}

struct GenerateOpts {
  std::string dist;
  std::size_t n = 0;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  double r1 = 1.0;
  double r2 = 2.0;
  std::string output;
};

int run_generate(const GenerateOpts& opts) {
  if ((opts.dist == "normal" || opts.dist == "ring") && opts.n == 0) {
    return fail_usage("generate --dist " + opts.dist + " requires --n >= 1");
  }
  abcd_dataset* raw = nullptr;
  if (abcd_dataset_generate(opts.dist.c_str(), opts.n, opts.d, opts.seed, opts.r1, opts.r2,
                            &raw) != ABCD_OK) {
    return fail_compute("generating data");
  }
  DatasetPtr dataset(raw);
  char* text = nullptr;
  if (abcd_dataset_to_csv(dataset.get(), &text) != ABCD_OK) return fail_compute("writing CSV");
  const int rc = write_output(opts.output, text);
  abcd_string_free(text);
  return rc;
}

// ---- bench ----

struct BenchGrid {
  std::vector<std::size_t> n_values{1000};
  std::vector<std::size_t> d_values{10};
  std::size_t reps = 10;
  std::uint64_t seed = 1;
};

int parse_grid(const std::string& text, BenchGrid& grid) {
  if (text.empty()) return 0;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos) return fail_usage("--grid: expected key=value in '" + part + "'");
    const std::string key = part.substr(0, eq);
    std::vector<std::uint64_t> values;
    std::istringstream list(part.substr(eq + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
      try {
        values.push_back(std::stoull(item));
      } catch (const std::exception&) {
        return fail_usage("--grid: '" + item + "' is not a number");
      }
    }
    if (values.empty()) return fail_usage("--grid: empty value list for '" + key + "'");
    if (key == "n") {
      grid.n_values.assign(values.begin(), values.end());
    } else if (key == "d") {
      grid.d_values.assign(values.begin(), values.end());
    } else if (key == "reps") {
      grid.reps = values.front();
    } else if (key == "seed") {
      grid.seed = values.front();
    } else {
      return fail_usage("--grid: unknown key '" + key + "'");
    }
  }
  if (grid.reps == 0) return fail_usage("--grid: reps must be at least 1");
  return 0;
}

int median_of_normal(std::size_t n, std::size_t d, std::uint64_t seed, const abcd_options& options,
                     ResultPtr& result, double& elapsed) {
  abcd_dataset* raw_data = nullptr;
  if (abcd_dataset_generate("normal", n, d, seed, 0, 0, &raw_data) != ABCD_OK) {
    return fail_compute("generating sample");
  }
  DatasetPtr dataset(raw_data);
  abcd_result* raw_result = nullptr;
  const auto start = std::chrono::steady_clock::now();
  if (abcd_median(dataset.get(), &options, &raw_result) != ABCD_OK) {
    return fail_compute("computing median");
  }
  elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.reset(raw_result);
  return 0;
}

int median_norm_sq(const abcd_result* result, std::size_t d, double& out) {
  size_t count = 0;
  if (abcd_result_median_size(result, &count) != ABCD_OK || count == 0) {
    return fail_compute("reading median members");
  }
  std::vector<double> mean(d, 0.0);
  std::vector<double> coords(d);
  for (size_t i = 0; i < count; ++i) {
    if (abcd_result_median_point(result, i, coords.data(), nullptr, nullptr) != ABCD_OK) {
      return fail_compute("reading median member");
    }
    for (std::size_t a = 0; a < d; ++a) mean[a] += coords[a];
  }
  out = 0.0;
  for (std::size_t a = 0; a < d; ++a) {
    const double c = mean[a] / static_cast<double>(count);
    out += c * c;
  }
  return 0;
}

int run_bench_accuracy(const BenchGrid& grid, std::string& report) {
  report = "n,d,rep,seed,members,norm_sq,p_value,seconds\n";
  abcd_options options;
  abcd_options_init(&options);
  for (std::size_t n : grid.n_values) {
    for (std::size_t d : grid.d_values) {
      {
        ResultPtr warm;
        double ignored = 0.0;
        if (const int rc = median_of_normal(n, d, grid.seed, options, warm, ignored)) return rc;
      }
      double sum_norm = 0.0, sum_p = 0.0, sum_sec = 0.0;
      double max_norm = 0.0, max_p = 0.0, max_sec = 0.0;
      for (std::size_t rep = 0; rep < grid.reps; ++rep) {
        const std::uint64_t seed = grid.seed + rep;
        ResultPtr result;
        double seconds = 0.0;
        if (const int rc = median_of_normal(n, d, seed, options, result, seconds)) return rc;
        double norm_sq = 0.0;
        if (const int rc = median_norm_sq(result.get(), d, norm_sq)) return rc;
        double p_value = 0.0;
        if (abcd_chi_square_cdf(norm_sq, static_cast<int>(d), &p_value) != ABCD_OK) {
          return fail_compute("computing p-value");
        }
        size_t members = 0;
        abcd_result_median_size(result.get(), &members);
        std::ostringstream row;
        row << n << ',' << d << ',' << rep << ',' << seed << ',' << members << ',' << norm_sq
            << ',' << p_value << ',' << seconds << '\n';
        report += row.str();
        sum_norm += norm_sq;
        sum_p += p_value;
        sum_sec += seconds;
        max_norm = std::max(max_norm, norm_sq);
        max_p = std::max(max_p, p_value);
        max_sec = std::max(max_sec, seconds);
      }
      const auto reps = static_cast<double>(grid.reps);
      std::ostringstream mean_row;
      mean_row << n << ',' << d << ",mean," << grid.seed << ",," << (sum_norm / reps) << ','
               << (sum_p / reps) << ',' << (sum_sec / reps) << '\n';
      mean_row << n << ',' << d << ",max," << grid.seed << ",," << max_norm << ',' << max_p << ','
               << max_sec << '\n';
      report += mean_row.str();
    }
  }
  return 0;
}

int run_bench_scaling(const BenchGrid& grid, std::string& report) {
  report = "kind,n,d,reps,mean_seconds\n";
  abcd_options options;
  abcd_options_init(&options);
  std::map<std::pair<std::size_t, std::size_t>, double> mean_time;
  for (std::size_t n : grid.n_values) {
    for (std::size_t d : grid.d_values) {
      {
        ResultPtr warm;
        double ignored = 0.0;
        if (const int rc = median_of_normal(n, d, grid.seed, options, warm, ignored)) return rc;
      }
      double total = 0.0;
      for (std::size_t rep = 0; rep < grid.reps; ++rep) {
        ResultPtr result;
        double seconds = 0.0;
        if (const int rc = median_of_normal(n, d, grid.seed + rep, options, result, seconds)) {
          return rc;
        }
        total += seconds;
      }
      const double mean = total / static_cast<double>(grid.reps);
      mean_time[{n, d}] = mean;
      std::ostringstream row;
      row << "cell," << n << ',' << d << ',' << grid.reps << ',' << mean << '\n';
      report += row.str();
    }
  }
  // Growth ratios: time vs d at fixed n against the linear model, and
  // time vs n at fixed d for consecutive sizes.
  if (grid.d_values.size() >= 2) {
    const std::size_t d_min = *std::min_element(grid.d_values.begin(), grid.d_values.end());
    const std::size_t d_max = *std::max_element(grid.d_values.begin(), grid.d_values.end());
    for (std::size_t n : grid.n_values) {
      const double ratio = mean_time[{n, d_max}] / mean_time[{n, d_min}];
      const double linear = static_cast<double>(d_max) / static_cast<double>(d_min);
      std::ostringstream row;
      row << "dratio," << n << ',' << d_min << "->" << d_max << ',' << ratio << ',' << linear
          << '\n';
      report += row.str();
    }
  }
  if (grid.n_values.size() >= 2) {
    std::vector<std::size_t> sorted_n = grid.n_values;
    std::sort(sorted_n.begin(), sorted_n.end());
    for (std::size_t d : grid.d_values) {
      for (std::size_t i = 0; i + 1 < sorted_n.size(); ++i) {
        const double ratio = mean_time[{sorted_n[i + 1], d}] / mean_time[{sorted_n[i], d}];
        std::ostringstream row;
        row << "nratio," << d << ',' << sorted_n[i] << "->" << sorted_n[i + 1] << ',' << ratio
            << ",\n";
        report += row.str();
      }
    }
  }
  return 0;
}

// ---- verify ----

struct VerifyOpts {
  std::size_t instances = 20;
  std::size_t n = 25;
  std::size_t d = 2;
  std::uint64_t seed = 1;
  std::size_t artificial = 1000;
  std::string output;
};

int exact_depth_of_sample(const abcd_dataset* dataset, std::size_t d, std::size_t index,
                          const std::vector<double>& flat, std::int64_t& out_num) {
  std::int64_t den = 0;
  if (d == 1) {
    if (abcd_exact_depth_1d(flat.data(), flat.size(), flat[index], &out_num, &den) != ABCD_OK) {
      return fail_compute("exact 1-D depth");
    }
    return 0;
  }
  const double xy[2] = {flat[2 * index], flat[2 * index + 1]};
  if (abcd_exact_depth_2d(dataset, xy, &out_num, &den) != ABCD_OK) {
    return fail_compute("exact 2-D depth");
  }
  return 0;
}

int run_verify(const VerifyOpts& opts, std::string& report) {
  if (opts.d != 1 && opts.d != 2) {
    return fail_usage("verify supports --d 1 or --d 2 (exact references exist there only)");
  }
  report = "kind,instance,seed,match_plain,match_augmented\n";
  std::map<std::int64_t, std::pair<std::size_t, std::size_t>> histogram; // delta -> counts
  double sum_plain = 0.0, sum_aug = 0.0;
  std::size_t improved_or_equal = 0;
  for (std::size_t inst = 0; inst < opts.instances; ++inst) {
    const std::uint64_t seed = opts.seed + inst;
    abcd_dataset* raw = nullptr;
    if (abcd_dataset_generate("normal", opts.n, opts.d, seed, 0, 0, &raw) != ABCD_OK) {
      return fail_compute("generating instance");
    }
    DatasetPtr dataset(raw);
    std::vector<double> flat(opts.n * opts.d);
    for (std::size_t i = 0; i < opts.n; ++i) {
      abcd_dataset_point(dataset.get(), i, flat.data() + i * opts.d);
    }

    abcd_options plain;
    abcd_options_init(&plain);
    abcd_options augmented;
    abcd_options_init(&augmented);
    augmented.artificial_count = opts.artificial;
    augmented.seed = seed;

    std::vector<std::int64_t> approx_plain(opts.n), approx_aug(opts.n);
    std::int64_t den = 0;
    if (abcd_depths_of_all_samples(dataset.get(), &plain, approx_plain.data(), &den) != ABCD_OK) {
      return fail_compute("plain depths");
    }
    if (abcd_depths_of_all_samples(dataset.get(), &augmented, approx_aug.data(), &den) != ABCD_OK) {
      return fail_compute("augmented depths");
    }

    std::size_t match_plain = 0, match_aug = 0;
    for (std::size_t i = 0; i < opts.n; ++i) {
      std::int64_t exact = 0;
      if (const int rc = exact_depth_of_sample(dataset.get(), opts.d, i, flat, exact)) return rc;
      if (approx_plain[i] == exact) ++match_plain;
      if (approx_aug[i] == exact) ++match_aug;
      histogram[approx_plain[i] - exact].first++;
      histogram[approx_aug[i] - exact].second++;
    }
    const double rate_plain = static_cast<double>(match_plain) / static_cast<double>(opts.n);
    const double rate_aug = static_cast<double>(match_aug) / static_cast<double>(opts.n);
    sum_plain += rate_plain;
    sum_aug += rate_aug;
    if (match_aug >= match_plain) ++improved_or_equal;
    std::ostringstream row;
    row << "instance," << inst << ',' << seed << ',' << rate_plain << ',' << rate_aug << '\n';
    report += row.str();
  }
  for (const auto& [delta, counts] : histogram) {
    std::ostringstream row;
    row << "delta," << delta << ",," << counts.first << ',' << counts.second << '\n';
    report += row.str();
  }
  const auto instances = static_cast<double>(opts.instances);
  std::ostringstream sum_row;
  sum_row << "summary,mean,," << (sum_plain / instances) << ',' << (sum_aug / instances) << '\n'
          << "summary,improved_or_equal,," << improved_or_equal << ',' << opts.instances << '\n';
  report += sum_row.str();
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximate Tukey depth, medians, and level sets via ball intersections"};
  app.require_subcommand(1);
  app.set_version_flag("--cli-version", abcd_version());

  CommonOpts median_opts;
  CLI::App* median_cmd = app.add_subcommand("median", "deepest level set of a point sample");
  add_engine_flags(median_cmd, median_opts);

  CommonOpts levels_opts;
  CLI::App* levels_cmd = app.add_subcommand("levelsets", "all computed depth level sets");
  add_engine_flags(levels_cmd, levels_opts);

  CommonOpts contour_opts;
  CLI::App* contour_cmd = app.add_subcommand("contour", "convex contour of the deepest level (2-D)");
  add_engine_flags(contour_cmd, contour_opts);

  CommonOpts depth_opts;
  std::string depth_point;
  std::int64_t depth_index = 0;
  CLI::App* depth_cmd = app.add_subcommand("depth", "depth of one point");
  add_engine_flags(depth_cmd, depth_opts);
  depth_cmd->add_option("--point", depth_point, "query point as \"c1,c2,...\"");
  depth_cmd->add_option("--index", depth_index, "1-based sample point index");

  GenerateOpts gen_opts;
  CLI::App* gen_cmd = app.add_subcommand("generate", "write a synthetic sample as CSV");
  gen_cmd->add_option("--dist", gen_opts.dist, "distribution")
      ->required()
      ->check(CLI::IsMember({"normal", "ring", "triangle"}));
  gen_cmd->add_option("--n", gen_opts.n, "sample size");
  gen_cmd->add_option("--d", gen_opts.d, "dimension");
  gen_cmd->add_option("--seed", gen_opts.seed, "generator seed");
  gen_cmd->add_option("--r1", gen_opts.r1, "ring inner radius");
  gen_cmd->add_option("--r2", gen_opts.r2, "ring outer radius");
  gen_cmd->add_option("--output", gen_opts.output, "write CSV here instead of stdout");

  std::string bench_mode = "accuracy";
  std::string bench_grid_text;
  std::string bench_output;
  CLI::App* bench_cmd = app.add_subcommand("bench", "accuracy and runtime-scaling benchmarks");
  bench_cmd->add_option("--mode", bench_mode, "benchmark flavor")
      ->check(CLI::IsMember({"accuracy", "scaling"}));
  bench_cmd->add_option("--grid", bench_grid_text,
                        "grid spec, e.g. \"n=500,1000;d=50;reps=5;seed=1\"");
  bench_cmd->add_option("--output", bench_output, "write the CSV report here");

  VerifyOpts verify_opts;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "compare approximate depths with exact references");
  verify_cmd->add_option("--instances", verify_opts.instances, "number of random instances");
  verify_cmd->add_option("--n", verify_opts.n, "points per instance");
  verify_cmd->add_option("--d", verify_opts.d, "dimension (1 or 2)");
  verify_cmd->add_option("--seed", verify_opts.seed, "base seed");
  verify_cmd->add_option("--artificial", verify_opts.artificial,
                         "artificial points for the augmented pass");
  verify_cmd->add_option("--output", verify_opts.output, "write the CSV report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (median_cmd->parsed()) return run_pipeline(median_opts, abcd_median, "computing median");
  if (levels_cmd->parsed()) return run_pipeline(levels_opts, abcd_level_sets, "computing level sets");
  if (contour_cmd->parsed()) return run_pipeline(contour_opts, abcd_contour, "computing contour");
  if (depth_cmd->parsed()) return run_depth(depth_opts, depth_point, depth_index);
  if (gen_cmd->parsed()) return run_generate(gen_opts);
  if (bench_cmd->parsed()) {
    BenchGrid grid;
    if (bench_mode == "scaling") grid.reps = 5;
    if (const int rc = parse_grid(bench_grid_text, grid)) return rc;
    std::string report;
    const int rc = bench_mode == "scaling" ? run_bench_scaling(grid, report)
                                           : run_bench_accuracy(grid, report);
    if (rc) return rc;
    return write_output(bench_output, report);
  }
  if (verify_cmd->parsed()) {
    std::string report;
    if (const int rc = run_verify(verify_opts, report)) return rc;
    return write_output(verify_opts.output, report);
  }
  return kExitUsage;
}
