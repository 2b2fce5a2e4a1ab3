// Copyright 2026 The nearsp Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nearsp/cli.hpp"

namespace fs = std::filesystem;
using nearsp::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NEARSP_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "nearsp_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("solve prints the outcome and exits by decision") {
  auto r = call({"solve", data("ccdv_sp.elect")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("YES\n", 0) == 0);
  CHECK(r.err.find("route: sp_approval_ccdv_flagged") != std::string::npos);
  auto q = call({"solve", "--quiet", data("ccdv_sp.elect")});
  CHECK(q.err.empty());
  CHECK(q.out == r.out);
}

TEST_CASE("solve and oracle agree on the sample files") {
  for (const auto& e : fs::directory_iterator(NEARSP_DATA_DIR)) {
    if (e.path().extension() != ".elect") continue;
    CAPTURE(e.path().string());
    auto a = call({"solve", "--quiet", e.path().string()});
    auto b = call({"oracle", "--quiet", e.path().string()});
    CHECK(a.code == b.code);
    CHECK(a.out.substr(0, 3) == b.out.substr(0, 3));
  }
}

TEST_CASE("errors and caps map to exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"solve", "/nonexistent/file.elect"}).code == 2);
  auto bad = scratch("bad.elect");
  std::ofstream(bad) << "ballots: orders\ncandidates: a b\nattack: ccdv\nsystem: plurality\npreferred: z\nbudget: 1\n";
  auto r = call({"solve", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 5") != std::string::npos);
  CHECK(call({"oracle", "--oracle-caps", "2,8,4,100", data("ccdv_sp.elect")}).code == 3);
}

TEST_CASE("reduce then oracle and verify") {
  auto gadget = scratch("partition_gadget.elect");
  auto r = call({"reduce", "partition", "--kind", "scoring1mav", "--alphas", "2", "1", "0", data("partition_1234.txt"),
                 "-o", gadget.string()});
  REQUIRE(r.code == 0);
  CHECK(call({"oracle", "--quiet", gadget.string()}).out.rfind("YES", 0) == 0);
  auto v = call({"verify", data("partition_1234.txt"), gadget.string()});
  CHECK(v.code == 0);
  CHECK(v.out == "agree: yes/yes\nsociety: ok\n");

  auto x3c = scratch("x3c_gadget.elect");
  REQUIRE(call({"reduce", "x3c", "--kind", "ccdcswoon", data("x3c_k2.txt"), "-o", x3c.string()}).code == 0);
  CHECK(call({"verify", data("x3c_k2.txt"), x3c.string()}).out == "agree: yes/yes\nsociety: ok\n");
}

TEST_CASE("check prints a table") {
  auto r = call({"check", data("ccac_dodgson.elect")});
  CHECK(r.code == 0);
  CHECK(r.out.find("mavericks: 1") != std::string::npos);
  CHECK(r.out.find("2-local (sufficient): yes") != std::string::npos);
}

TEST_CASE("bench output is reproducible") {
  auto a = call({"bench", "--suite", "dodgson-distance", "--quiet", "--seed", "3"});
  auto b = call({"bench", "--suite", "dodgson-distance", "--quiet", "--seed", "3", "--threads", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(call({"bench", "--suite", "no-such-suite"}).code == 2);
}
