// Copyright (c) 2026 abcdepth contributors
// SPDX-License-Identifier: Apache-2.0
//
// Drives the installed command-line binary as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunOutcome {
  int status = -1;
  std::string output;
};

RunOutcome run(const std::string& command) {
  RunOutcome outcome;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) outcome.output.append(buffer, got);
  const int raw = pclose(pipe);
  outcome.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return outcome;
}

const std::string cli = ABCDEPTH_CLI_PATH;

std::filesystem::path scratch_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("abcdepth_cli_test_" + name);
}

} // namespace

TEST_CASE("generate writes csv points") {
  const auto tri = run(cli + " generate --dist triangle 2>/dev/null");
  CHECK(tri.status == 0);
  CHECK(tri.output == "0,1\n-1,0\n1,0\n");

  const auto ring = run(cli + " generate --dist ring --n 50 --seed 4 2>/dev/null");
  CHECK(ring.status == 0);

  const auto missing_n = run(cli + " generate --dist normal 2>/dev/null");
  CHECK(missing_n.status == 2);
}

TEST_CASE("median reads stdin and reports the triangle depth") {
  const auto result = run(cli + " generate --dist triangle | " + cli +
                          " median --artificial 1000 --seed 3 2>/dev/null");
  CHECK(result.status == 0);
  CHECK(result.output.find("\"numerator\": 1") != std::string::npos);
  CHECK(result.output.find("\"denominator\": 3") != std::string::npos);
  CHECK(result.output.find("\"command\": \"median\"") != std::string::npos);
}

TEST_CASE("depth needs exactly one target") {
  const auto file = scratch_file("square.csv");
  std::ofstream(file) << "0,0\n1,0\n1,1\n0,1\n";
  const std::string base = cli + " depth --input " + file.string();

  const auto by_index = run(base + " --index 1 2>/dev/null");
  CHECK(by_index.status == 0);
  CHECK(by_index.output.find("\"mode\": \"sample\"") != std::string::npos);

  const auto by_point = run(base + " --point \"0.5,0.5\" 2>/dev/null");
  CHECK(by_point.status == 0);
  CHECK(by_point.output.find("\"mode\": \"out_of_sample\"") != std::string::npos);

  CHECK(run(base + " 2>/dev/null").status == 2);
  CHECK(run(base + " --index 1 --point \"0,0\" 2>/dev/null").status == 2);
  CHECK(run(base + " --point \"0.5,oops\" 2>/dev/null").status == 2);
  std::filesystem::remove(file);
}

TEST_CASE("usage and computation errors use distinct exit codes") {
  CHECK(run(cli + " frobnicate 2>/dev/null").status == 2);
  CHECK(run(cli + " median --no-such-flag 2>/dev/null").status == 2);

  const auto file = scratch_file("broken.csv");
  std::ofstream(file) << "1,2\n3,oops\n";
  const auto broken = run(cli + " median --input " + file.string() + " 2>/dev/null");
  CHECK(broken.status == 1);
  std::filesystem::remove(file);

  const auto absent = run(cli + " median --input /nonexistent.csv 2>/dev/null");
  CHECK(absent.status == 1);
}

TEST_CASE("csv format and file output") {
  const auto file = scratch_file("line.csv");
  std::ofstream(file) << "0\n1\n2\n";
  const auto csv = run(cli + " median --input " + file.string() + " --format csv 2>/dev/null");
  CHECK(csv.status == 0);
  CHECK(csv.output.find("depth_num") != std::string::npos);

  const auto out = scratch_file("result.json");
  const auto to_file = run(cli + " median --input " + file.string() + " --output " + out.string() +
                           " 2>/dev/null");
  CHECK(to_file.status == 0);
  CHECK(to_file.output.empty());
  std::ifstream in(out);
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contents.find("\"median\"") != std::string::npos);
  std::filesystem::remove(file);
  std::filesystem::remove(out);
}

TEST_CASE("levelsets and contour subcommands") {
  const auto file = scratch_file("square2.csv");
  std::ofstream(file) << "0,0\n1,0\n1,1\n0,1\n";
  const auto levels = run(cli + " levelsets --input " + file.string() + " 2>/dev/null");
  CHECK(levels.status == 0);
  CHECK(levels.output.find("\"levels\"") != std::string::npos);

  const auto contour = run(cli + " contour --input " + file.string() + " 2>/dev/null");
  CHECK(contour.status == 0);
  CHECK(contour.output.find("\"vertex_count\": 4") != std::string::npos);
  std::filesystem::remove(file);
}

TEST_CASE("augmented dump carries the marker column") {
  const auto dump = scratch_file("augmented.csv");
  const auto result = run(cli + " generate --dist triangle | " + cli +
                          " median --artificial 7 --seed 2 --dump-augmented " + dump.string() +
                          " 2>/dev/null");
  CHECK(result.status == 0);
  std::ifstream in(dump);
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contents.find("x0,x1,artificial") != std::string::npos);
  CHECK(contents.find(",1\n") != std::string::npos);
  std::filesystem::remove(dump);
}

TEST_CASE("bench reports cells and ratios") {
  const auto scaling = run(cli + " bench --mode scaling --grid \"n=60,120;d=4;reps=2;seed=1\" 2>/dev/null");
  CHECK(scaling.status == 0);
  CHECK(scaling.output.find("kind,n,d,reps,mean_seconds") != std::string::npos);
  CHECK(scaling.output.find("cell,60,4,2,") != std::string::npos);
  CHECK(scaling.output.find("nratio,4,60->120,") != std::string::npos);

  const auto accuracy = run(cli + " bench --mode accuracy --grid \"n=80;d=2,3;reps=2;seed=9\" 2>/dev/null");
  CHECK(accuracy.status == 0);
  CHECK(accuracy.output.find("n,d,rep,seed,members,norm_sq,p_value,seconds") != std::string::npos);
  CHECK(accuracy.output.find("80,2,mean,") != std::string::npos);

  CHECK(run(cli + " bench --grid \"reps=0\" 2>/dev/null").status == 2);
  CHECK(run(cli + " bench --grid \"n=abc\" 2>/dev/null").status == 2);
}

TEST_CASE("verify compares against the exact references") {
  const auto report = run(cli + " verify --instances 2 --n 12 --d 2 --seed 5 --artificial 200 2>/dev/null");
  CHECK(report.status == 0);
  CHECK(report.output.find("kind,instance,seed,match_plain,match_augmented") != std::string::npos);
  CHECK(report.output.find("summary,mean,") != std::string::npos);
  CHECK(report.output.find("delta,") != std::string::npos);

  const auto exact_1d = run(cli + " verify --instances 2 --n 10 --d 1 --seed 5 2>/dev/null");
  CHECK(exact_1d.status == 0);

  CHECK(run(cli + " verify --d 3 2>/dev/null").status == 2);
}
