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

#include "doctest.h"
#include "helpers.hpp"
#include "nearsp/error.hpp"
#include "nearsp/oracle.hpp"
#include "nearsp/solve.hpp"

using namespace nearsp;

TEST_CASE("oracle caps") {
  auto big = test::load(
      "ballots: orders\ncandidates: a b c d e f g\nattack: ccdc\nsystem: plurality\npreferred: a\nbudget: 1\n"
      "voter: b > a > c > d > e > f > g\n");
  CHECK_THROWS_AS(brute_control(big), CapExceeded);
  CHECK(brute_control(big, OracleCaps::relaxed()).yes);
}

TEST_CASE("oracle witnesses are least in shortlex order") {
  auto inst = test::load(
      "ballots: orders\ncandidates: p a b\nattack: ccdc\nsystem: plurality\npreferred: p\nbudget: 2\n"
      "voter: a > p > b\nvoter: b > p > a\n");
  auto out = brute_control(inst);
  REQUIRE(out.yes);
  CHECK(out.witness->deleted_candidates == std::vector<CandidateId>{1});
}

TEST_CASE("solve routes cells") {
  auto route = [](const std::string& text) { return solve(test::load(text)).route; };
  const std::string approval =
      "ballots: approval\ncandidates: a b c\naxis: a b c\nsystem: approval\npreferred: a\nbudget: 1\nvoter: {b}\n";
  CHECK(route(approval + "attack: ccdv\nsociety: sp\n") == "sp_approval_ccdv_flagged");
  CHECK(route(approval + "attack: ccdv\nsociety: maverick 1\n") == "maverick_control_approval");
  CHECK(route(approval + "attack: bribery\nsociety: sp\n") == "maverick_bribery_approval");
  CHECK(route(approval + "attack: ccdv\n").rfind("oracle(", 0) == 0);
  const std::string plur =
      "ballots: orders\ncandidates: a b c\naxis: a b c\nsystem: plurality\npreferred: a\nbudget: 1\n"
      "voter: b > a > c\n";
  CHECK(route(plur + "attack: ccdc\nsociety: sp\n") == "ccdc_plurality_klocal(k=1)");
  CHECK(route(plur + "attack: ccdc\nsociety: dodgson 1\n") == "ccdc_plurality_klocal(k=2)");
  CHECK(route(plur + "attack: ccdc\nsociety: maverick 1\n") == "kmaverick_control_plurality");
  // A vote outside the declared society sends the instance to the oracle.
  CHECK(route(plur + "attack: ccdc\nsociety: sp\nvoter: a > c > b\n").rfind("oracle(", 0) == 0);
  SolveOptions strict;
  strict.fallback = false;
  CHECK_THROWS_AS(solve(test::load(plur + "attack: ccdc\nsociety: sp\nvoter: a > c > b\n"), strict), PreconditionError);
}
