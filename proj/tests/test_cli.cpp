// Copyright 2026 The lpmul Authors
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lpmul/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lpmul::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify subcommand") {
  const Outcome ok = invoke({"verify", "--width", "4"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("256/256") != std::string::npos);
  CHECK(ok.out.find("PASS") != std::string::npos);
  CHECK(invoke({"verify", "--width", "9"}).code == 2);
  CHECK(invoke({"verify"}).code == 2);
}

TEST_CASE("run subcommand") {
  const Outcome r = invoke({"run", "--arch", "lowpower", "--width", "3", "--a",
                            "3", "--b", "2", "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Answer -> 000110 (6)") != std::string::npos);
  CHECK(r.out.find("product: 6") != std::string::npos);
  CHECK(r.out.find("multiplier_shift       0") != std::string::npos);

  const Outcome hex = invoke({"run", "--arch", "conv", "--width", "8", "--a",
                              "0xff", "--b", "0b11111111"});
  CHECK(hex.code == 0);
  CHECK(hex.out.find("product: 65025") != std::string::npos);

  const Outcome trunc = invoke({"run", "--arch", "conv", "--width", "4", "--a",
                                "5", "--b", "15", "--effective-width", "2"});
  CHECK(trunc.code == 0);
  CHECK(trunc.out.find("product: 15") != std::string::npos);
}

TEST_CASE("run usage errors exit with 2") {
  CHECK(invoke({"run", "--arch", "bogus", "--width", "3", "--a", "1", "--b", "1"}).code == 2);
  CHECK(invoke({"run", "--arch", "conv", "--width", "3", "--a", "8", "--b", "1"}).code == 2);
  CHECK(invoke({"run", "--arch", "conv", "--width", "40", "--a", "1", "--b", "1"}).code == 2);
  CHECK(invoke({"run", "--arch", "conv", "--width", "3", "--a", "1", "--b", "1",
                "--effective-width", "4"}).code == 2);
  CHECK(invoke({"run", "--arch", "lowpower", "--width", "8", "--a", "1", "--b", "1",
                "--block-size", "0"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("sweep writes csv and json reports") {
  const fs::path dir = fs::temp_directory_path() / "lpmul_cli_test";
  fs::create_directories(dir);
  const fs::path csv = dir / "r.csv";
  const fs::path json = dir / "r.json";

  const Outcome a = invoke({"sweep", "--widths", "4,8", "--dist", "uniform",
                            "--trials", "300", "--seed", "5", "--out",
                            csv.string(), "--format", "csv"});
  REQUIRE(a.code == 0);
  CHECK(a.out.find("reference 35.25%") != std::string::npos);
  const std::string text = slurp(csv);
  CHECK(text.find("# generator: mt19937_64") == 0);
  CHECK(text.find("\n4,conv,300,") != std::string::npos);

  const Outcome b = invoke({"sweep", "--widths", "4,8", "--dist", "uniform",
                            "--trials", "300", "--seed", "5", "--out",
                            json.string(), "--format", "json"});
  REQUIRE(b.code == 0);
  const auto doc = nlohmann::json::parse(slurp(json));
  CHECK(doc["rows"].size() == 4);
  CHECK(doc["meta"]["seed"] == "5");

  const fs::path model = dir / "m.cfg";
  std::ofstream(model) << "vdd = 2\n";
  const Outcome c = invoke({"sweep", "--widths", "4", "--trials", "10",
                            "--model", model.string(), "--block-size", "2",
                            "--ffs-cost", "1", "--gate-cost", "0"});
  CHECK(c.code == 0);
  CHECK(c.out.find("width,arch") != std::string::npos);

  const Outcome fixed = invoke({"sweep", "--widths", "8", "--dist", "fixed-pair",
                                "--a", "3", "--b", "2", "--trials", "1"});
  CHECK(fixed.code == 0);
  CHECK(fixed.out.find("8,lowpower,1,0,") != std::string::npos);

  CHECK(invoke({"sweep", "--widths", "20"}).code == 2);
  CHECK(invoke({"sweep", "--dist", "weird"}).code == 2);
  CHECK(invoke({"sweep", "--format", "xml"}).code == 2);
  CHECK(invoke({"sweep", "--widths", "4", "--trials", "5", "--out",
                "/nonexistent-dir/x.csv"}).code == 1);
  fs::remove_all(dir);
}
