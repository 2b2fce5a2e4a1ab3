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
#include "nearsp/io.hpp"
#include "nearsp/oracle.hpp"
#include "nearsp/replay.hpp"
#include "nearsp/solve.hpp"

namespace fs = std::filesystem;
using namespace nearsp;

// Every corpus file survives parse/emit and solve matches the oracle on it.
TEST_CASE("corpus round trip") {
  int seen = 0;
  for (const auto& e : fs::directory_iterator(NEARSP_CORPUS_DIR)) {
    if (e.path().extension() != ".elect") continue;
    ++seen;
    CAPTURE(e.path().filename().string());
    std::ifstream f(e.path());
    std::stringstream ss;
    ss << f.rdbuf();
    auto inst = parse_instance(ss.str());
    validate_instance(inst);
    const std::string once = emit_instance(inst);
    CHECK(parse_instance(once) == inst);
    CHECK(emit_instance(parse_instance(once)) == once);
    auto got = solve(inst);
    auto want = brute_solve(inst, OracleCaps::relaxed());
    CHECK(got.outcome.yes == want.yes);
    CHECK(replay_witness(inst, got.outcome).empty());
    CHECK(replay_witness(inst, want).empty());
  }
  CHECK(seen >= 15);
}
