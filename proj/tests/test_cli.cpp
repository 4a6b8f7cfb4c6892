// Copyright 2026 The GBM Motif Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result gbm_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gbm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = gbm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("gbm_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return file(name);
  }
};

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("generate, cluster and eval round trip") {
  TempDir dir;
  const auto g = dir.file("g.txt"), t = dir.file("t.txt"), p = dir.file("p.txt"), x = dir.file("x.txt");
  REQUIRE(gbm_cli({"generate", "-n", "2000", "-a", "30", "-b", "2", "--seed", "4", "-o", g, "--labels", t,
                   "--positions", x})
              .code == 0);
  CHECK(fs::file_size(g) > 0);
  REQUIRE(gbm_cli({"cluster", "-g", g, "-a", "30", "-b", "2", "-o", p}).code == 0);
  const Result ev = gbm_cli({"eval", "--pred", p, "--truth", t});
  REQUIRE(ev.code == 0);
  const auto report = nlohmann::json::parse(ev.out);
  CHECK(report["exact_recovery"] == true);
  CHECK(report["f_score"] == 1.0);
  CHECK(report["n"] == 2000);

  std::ifstream positions(x);
  std::string first;
  std::getline(positions, first);
  CHECK(first.rfind("0 ", 0) == 0);
}

TEST_CASE("other generators") {
  CHECK(gbm_cli({"generate", "--model", "sbm", "-n", "100", "--p", "0.2", "--q", "0.05"}).code == 0);
  const Result sphere = gbm_cli({"generate", "--model", "sphere", "-n", "100", "--dim", "3", "--beta-s", "0.5",
                                 "--beta-d", "0.9"});
  CHECK(sphere.code == 0);
  CHECK(sphere.out.rfind("n 100\n", 0) == 0);
  CHECK(gbm_cli({"generate", "--model", "sphere", "-n", "100", "--beta-s", "0.9", "--beta-d", "0.5"}).code == 1);
  CHECK(gbm_cli({"generate", "--model", "torus"}).code == 1);
  CHECK(gbm_cli({"generate", "-n", "7", "-a", "2", "-b", "1"}).code == 1);
}

TEST_CASE("real-mode clustering with sparse ids") {
  TempDir dir;
  std::string text;
  for (int base : {100, 200}) {
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) text += std::to_string(base + i) + " " + std::to_string(base + j) + "\n";
    }
  }
  text += "104 200\n";
  const auto g = dir.write("cliques.txt", text);
  const Result r = gbm_cli({"cluster", "-g", g, "--remap", "--mode", "real", "--t1", "3", "--t2", "3", "--t3", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("100 0\n") != std::string::npos);
  CHECK(r.out.find("204 1\n") != std::string::npos);
}

TEST_CASE("motif-stats and thresholds output") {
  TempDir dir;
  const auto g = dir.write("g.txt", "0 1\n0 2\n1 2\n1 3\nn 5\n");
  const auto fixed = dir.write("h.txt", "n 5\n0 1\n0 2\n1 2\n1 3\n");
  CHECK(gbm_cli({"motif-stats", "-g", g}).code == 2);  // header must come first
  const Result ms = gbm_cli({"motif-stats", "-g", fixed});
  REQUIRE(ms.code == 0);
  CHECK(ms.out == "u,v,m1,m2,m3,m4\n0,1,1,0,1,1\n0,2,1,0,0,2\n1,2,1,1,0,1\n1,3,0,2,0,1\n");
  const Result js = gbm_cli({"motif-stats", "-g", fixed, "--json"});
  CHECK(nlohmann::json::parse(js.out.substr(0, js.out.find('\n')))["m4"] == 1);

  const Result th = gbm_cli({"thresholds", "-a", "25", "-b", "2", "-n", "5000", "--motifs", "1,4"});
  REQUIRE(th.code == 0);
  CHECK(th.out.rfind("motif,e_s,e_d,condition_met,hypothesis_met\n1,0.01277578979,0.01271463909,true,true\n4,", 0) == 0);
  const Result thj = gbm_cli({"thresholds", "-a", "25", "-b", "2", "-n", "5000", "--json"});
  CHECK(nlohmann::json::parse(thj.out)["condition_met"] == true);
  CHECK(gbm_cli({"thresholds", "-a", "1", "-b", "2"}).code == 1);
}

TEST_CASE("sweep, contrast and theory curves") {
  const Result sw = gbm_cli({"sweep", "-n", "500", "--b", "1,2", "--a-min", "10", "--a-max", "12", "--a-step", "2",
                             "--trials", "2", "--seed", "3"});
  REQUIRE(sw.code == 0);
  CHECK(lines(sw.out) == 5);
  const Result swj = gbm_cli({"sweep", "-n", "500", "--b", "1", "--a-min", "10", "--a-max", "10", "--trials", "2",
                              "--json", "--success", "f>=0.9", "--levels", "expected", "--threads", "2"});
  REQUIRE(swj.code == 0);
  CHECK(nlohmann::json::parse(swj.out)["trials"] == 2);
  CHECK(gbm_cli({"sweep", "--success", "f>=2"}).code == 1);
  CHECK(gbm_cli({"sweep", "--levels", "magic"}).code == 1);

  const Result warned = gbm_cli({"sweep", "-n", "500", "--b", "5", "--a-min", "1", "--a-max", "2", "--trials", "1"});
  CHECK(warned.code == 0);
  CHECK(warned.err.find("warning") != std::string::npos);

  const Result sc = gbm_cli({"sbm-contrast", "-n", "500", "-a", "20", "-b", "2", "--trials", "2"});
  REQUIRE(sc.code == 0);
  CHECK(sc.out.find("\ngbm,2,20,2,") != std::string::npos);
  CHECK(sc.out.find("\nsbm,2,20,2,") != std::string::npos);

  const Result tc = gbm_cli({"theory-curves", "--b", "1,2"});
  REQUIRE(tc.code == 0);
  CHECK(tc.out == "b,motif1_min_a,motif23_min_a,motif4_min_a\n1,17.5,41.5,78\n2,25,50,87.5\n");
  CHECK(lines(gbm_cli({"theory-curves", "--json"}).out) == 10);
}

TEST_CASE("config files fill unspecified options") {
  TempDir dir;
  const auto toml = dir.write("s.toml", "# sweep\nn = 500\nb_values = [1, 2]\na_min = 10\na_max = 10\ntrials_per_cell = 2\n");
  const Result a = gbm_cli({"sweep", "--config", toml});
  REQUIRE(a.code == 0);
  CHECK(lines(a.out) == 3);
  const Result b = gbm_cli({"sweep", "--config", toml, "--b", "3"});
  REQUIRE(b.code == 0);
  CHECK(lines(b.out) == 2);
  CHECK(b.out.find("\n3,10,2,") != std::string::npos);

  const auto json = dir.write("s.json", R"({"n": 500, "b_values": [1], "a_min": 10, "a_max": 10, "trials_per_cell": 2, "motifs": "1,4", "json": true})");
  const Result c = gbm_cli({"sweep", "--config", json});
  REQUIRE(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["a"] == 10.0);

  const auto unknown = dir.write("u.toml", "colour = 3\n");
  CHECK(gbm_cli({"sweep", "--config", unknown}).code == 1);
  CHECK(gbm_cli({"sweep", "--config", dir.file("missing.toml")}).code == 2);
  const auto broken = dir.write("b.json", "{\"n\": ");
  CHECK(gbm_cli({"sweep", "--config", broken}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(gbm_cli({}).code == 1);
  CHECK(gbm_cli({"frobnicate"}).code == 1);
  CHECK(gbm_cli({"--help"}).code == 0);
  CHECK(gbm_cli({"cluster"}).code == 1);
  CHECK(gbm_cli({"thresholds", "-a", "x", "-b", "1"}).code == 1);
  CHECK(gbm_cli({"cluster", "-g", "/nonexistent", "-a", "5", "-b", "1"}).code == 2);
  TempDir dir;
  const auto bad = dir.write("bad.txt", "0 1\n1 one\n");
  const Result r = gbm_cli({"cluster", "-g", bad, "-a", "5", "-b", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  const auto p = dir.write("p.txt", "0 0\n1 1\n");
  const auto t = dir.write("t.txt", "0 0\n1 1\n2 0\n");
  CHECK(gbm_cli({"eval", "--pred", p, "--truth", t}).code == 2);
  const auto disconnected = dir.write("d.txt", "0 1\n2 3\n");
  CHECK(gbm_cli({"cluster", "-g", disconnected, "-a", "5", "-b", "1", "--disconnected", "error"}).code == 2);
  const Result per = gbm_cli({"cluster", "-g", disconnected, "-a", "5", "-b", "1"});
  CHECK(per.code == 0);
  CHECK(per.err.find("2 components") != std::string::npos);
}
