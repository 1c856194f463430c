// Copyright 2026 The Authors.
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
#include <sstream>

#include "cli.hpp"
#include "pm/construct.hpp"
#include "pm/io.hpp"

using namespace pm;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / "pm_cli_test") {
    fs::remove_all(path_);
    fs::create_directories(path_);
    REQUIRE(run({"examples", "--emit", path_.string()}).code == 0);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator()(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("examples, validate, info, components") {
  TempDir dir;
  CHECK(fs::exists(dir("counterexample.json")));
  CHECK(fs::exists(dir("unique_ordering_3.json")));
  auto v = run({"validate", dir("counterexample.json")});
  CHECK(v.code == 0);
  CHECK(v.out == "valid 2-polymatroid on 3 elements\n");

  save(Polymatroid({"a", "b"}, 2, {0, 1, 1, 3}), dir("bad.json"));
  v = run({"validate", dir("bad.json")});
  CHECK(v.code == 1);
  CHECK(v.out.find("submodular") != std::string::npos);
  CHECK(run({"info", dir("bad.json")}).code == 2);

  const auto info = run({"info", dir("counterexample.json")});
  CHECK(info.code == 0);
  CHECK(info.out.find("connected: yes") != std::string::npos);
  CHECK(info.out.find("  x line (rank 2)") != std::string::npos);

  CHECK(run({"minor", dir("counterexample.json"), "--contract", "y", "-o", dir("c.json")}).code ==
        0);
  const auto comps = run({"components", dir("c.json")});
  CHECK(comps.out == "{x}\n{z}\n");
}

TEST_CASE("chain and orderings") {
  TempDir dir;
  const auto chain = run({"chain", dir("counterexample.json"), dir("line_z.json")});
  CHECK(chain.code == 0);
  CHECK(chain.out == "delete x\ndelete y\n");
  CHECK(run({"chain", dir("counterexample.json"), dir("line_z.json")}).out == chain.out);

  const auto one = run({"orderings", dir("unique_ordering_1.json"), dir("u23.json"),
                        "--constrained", "--count-only"});
  CHECK(one.code == 0);
  CHECK(one.out == "1\n");
  const auto two = run({"orderings", dir("unique_ordering_2.json"), dir("u23.json")});
  CHECK(two.out == "f1 f2\n");
  const auto cons =
      run({"orderings", dir("unique_ordering_2.json"), dir("u23.json"), "--constrained"});
  CHECK(cons.out == "delete f1, delete f2\ncontract f1, delete f2\n");
}

TEST_CASE("natural, twosum and decompose") {
  TempDir dir;
  const auto nat = run({"natural", dir("line_z.json"), "-o", dir("nat.json")});
  CHECK(nat.code == 0);
  CHECK(nat.out == "z -> z#1,z#2\n");
  CHECK(equals(load(dir("nat.json")), uniform_matroid(2, 2, {"z#1", "z#2"})));

  save(cycle_matroid(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), dir("square.json"));
  const auto dec = run({"decompose", dir("square.json"), "--side", "a,b", "-o", dir("part")});
  CHECK(dec.code == 0);
  CHECK(dec.out.rfind("basepoint p#1\n", 0) == 0);
  const auto sum = run({"twosum", dir("part_1.json"), dir("part_2.json"), "--basepoint", "p#1",
                        "-o", dir("sum.json")});
  CHECK(sum.code == 0);
  CHECK(equals(load(dir("sum.json")), load(dir("square.json"))));
  const auto stdout_sum =
      run({"twosum", dir("part_1.json"), dir("part_2.json"), "--basepoint", "p#1"});
  CHECK(equals(parse(stdout_sum.out), load(dir("square.json"))));
}

TEST_CASE("usage and input errors exit 2") {
  TempDir dir;
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"info", dir("counterexample.json"), "--frobnicate"}).code == 2);
  CHECK(run({"info", dir("missing.json")}).code == 2);
  const auto label = run({"minor", dir("counterexample.json"), "--delete", "w"});
  CHECK(label.code == 2);
  CHECK(label.err.find("'w'") != std::string::npos);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--max-n", "99"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify and replay") {
  TempDir dir;
  const auto a = run({"verify", "--suite", "check_hall_splitter", "--max-n", "3"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("check_hall_splitter PASS checked=", 0) == 0);
  CHECK(run({"verify", "--suite", "check_hall_splitter", "--max-n", "3"}).out == a.out);
  const auto ex = run({"verify", "--suite", "explore_conjecture", "--k", "3", "--budget", "20"});
  CHECK(ex.code == 0);
  CHECK(ex.out.find("instances=20") != std::string::npos);

  const Polymatroid broken({"a", "b", "c"}, 2, {0, 1, 1, 1, 1, 2, 2, 3});
  save_counterexample({"check_lambda_zero_equal", "broken", broken, std::nullopt, "w"},
                      dir("cx.json"));
  const auto rep = run({"replay", dir("cx.json")});
  CHECK(rep.code == 3);
  CHECK(rep.out.rfind("check_lambda_zero_equal FAIL", 0) == 0);
}
