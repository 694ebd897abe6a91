// Copyright 2026 The garside-spectra authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(GARSIDE_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("garside-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("normalize prints the left normal form") {
  auto r = run("normalize B 2 '1 1 0 1 0 0' --format plain");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("(-1,-2); (-2,1)") != std::string::npos);
  CHECK(r.output.find("length 2") != std::string::npos);
  r = run("normalize B 2 '1 1 0 1 0 1' --format plain");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("length 3") != std::string::npos);
  r = run("normalize B 2 '' --format plain");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("length 0") != std::string::npos);
  r = run("normalize A 3 '0 1 0' --format plain");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("length") != std::string::npos);
}

TEST_CASE("count reproduces a published value") {
  TempDir tmp;
  std::string cache = " --cache-dir " + tmp.path.string();
  auto r = run("count B 4 6 --format plain" + cache);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "988224026497\n");
  r = run("count B 2 0 --format plain" + cache);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1\n");
  r = run("count B 2 5 --format json" + cache);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"count\": \"727\"") != std::string::npos);
}

TEST_CASE("divisibility verdicts") {
  TempDir tmp;
  std::string cache = " --cache-dir " + tmp.path.string();
  auto r = run("divides B 3 --format plain" + cache);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "true\n");
  r = run("divides D 4 --format plain" + cache);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "false\n");
}

TEST_CASE("series emits the reduced rational function") {
  TempDir tmp;
  auto r = run("series I 7 --format plain --terms 3 --cache-dir " +
               tmp.path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("6*t + 1") != std::string::npos);
  CHECK(r.output.find("1 13") != std::string::npos);
}

TEST_CASE("cache files are byte-stable") {
  TempDir tmp;
  std::string cache = " --cache-dir " + tmp.path.string();
  auto r = run("adj B 3" + cache);
  CHECK(r.exit_code == 0);
  auto file = tmp.path / "adjp-B3.json";
  REQUIRE(std::filesystem::exists(file));
  std::string first = slurp(file);
  // the cached document has no timestamp, so recomputation is identical
  r = run("cache clear" + cache);
  CHECK(r.exit_code == 0);
  CHECK_FALSE(std::filesystem::exists(file));
  r = run("adj B 3" + cache);
  CHECK(r.exit_code == 0);
  CHECK(slurp(file) == first);
  r = run("cache list" + cache);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("adjp-B3.json") != std::string::npos);
}

TEST_CASE("huge groups are refused with an estimate") {
  auto r = run("adj E 7");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("2903040") != std::string::npos);
  CHECK(r.output.find("--allow-huge") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("charpoly Z 3").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("count B 2").exit_code == 2);       // missing d
  CHECK(run("normalize B 2 '0 7'").exit_code == 2);  // letter out of range
}

TEST_CASE("verification subcommands succeed") {
  auto r = run("hopf-verify --max-rank 2 --format plain");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("fail") == std::string::npos);
  TempDir tmp;
  r = run("paper-tables --format plain --cache-dir " + tmp.path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("fail") == std::string::npos);
}
