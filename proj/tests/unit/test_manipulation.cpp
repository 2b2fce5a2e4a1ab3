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
#include "nearsp/manipulation.hpp"
#include "nearsp/oracle.hpp"
#include "nearsp/replay.hpp"

using namespace nearsp;

namespace {

std::string veto5(const std::string& voters, const std::string& manipulators = "1 2") {
  return "ballots: orders\ncandidates: a b c d e\naxis: a b c d e\nattack: ccwm\nsystem: veto\npreferred: c\n"
         "society: maverick 2\nmanipulators: " + manipulators + "\n" + voters;
}

std::string three(const std::string& system, const std::string& society, const std::string& voters,
                  const std::string& manipulators) {
  return "ballots: orders\ncandidates: a p b\naxis: a p b\nattack: ccwm\nsystem: " + system +
         "\npreferred: p\nsociety: " + society + "\n" + (manipulators.empty() ? "" : "manipulators: " + manipulators + "\n") +
         voters;
}

}  // namespace

TEST_CASE("veto: endpoint vetoes leave an interior p safe") {
  auto inst = test::load(veto5("voter w=3: c > b > d > e > a\nvoter w=2: d > c > b > a > e\n"));
  auto out = ccwm_veto_never_vetoed(inst);
  CHECK(out.yes);
  CHECK(replay_witness(inst, out).empty());
  CHECK(brute_ccwm(inst).yes);
}

TEST_CASE("veto: one veto of p decides no") {
  auto inst = test::load(veto5("voter: a > b > d > e > c\nvoter w=5: c > b > d > e > a\n", "9 9"));
  CHECK_FALSE(ccwm_veto_never_vetoed(inst).yes);
  CHECK_FALSE(brute_ccwm(inst).yes);
}

TEST_CASE("veto: no nonmanipulators") {
  auto inst = test::load(veto5("", "4 1 7"));
  auto out = ccwm_veto_never_vetoed(inst);
  REQUIRE(out.yes);
  CHECK(out.witness->manipulator_votes.size() == 3);
  CHECK(replay_witness(inst, out).empty());
}

TEST_CASE("veto solver rejects the hard regime") {
  auto text = veto5("");
  text.replace(text.find("maverick 2"), 10, "maverick 3");
  CHECK_THROWS_AS(ccwm_veto_never_vetoed(test::load(text)), PreconditionError);
}

TEST_CASE("dispatcher routes by cell") {
  auto four = [](int k) {
    return test::load("ballots: orders\ncandidates: a b c d\naxis: a b c d\nattack: ccwm\nsystem: veto\npreferred: b\n"
                      "society: maverick " + std::to_string(k) + "\nmanipulators: 1\nvoter: b > a > c > d\n");
  };
  CHECK(ccwm_dispatch(four(1)).route == CcwmRoute::VetoNeverVetoed);
  CHECK(ccwm_dispatch(four(2)).route == CcwmRoute::OracleNpHard);
  CHECK(ccwm_dispatch(four(1)).outcome.yes == ccwm_dispatch(four(2)).outcome.yes);
  auto scoring = test::load(three("scoring 2 1 0", "maverick 1", "voter: a > p > b\n", "1"));
  CHECK(ccwm_dispatch(scoring).route == CcwmRoute::OracleNpHard);
  auto plur = test::load(three("plurality", "sp", "voter w=2: a > p > b\n", "3"));
  auto v = ccwm_dispatch(plur);
  CHECK(v.route == CcwmRoute::PluralityLike);
  CHECK(v.outcome.yes);
}

TEST_CASE("single-caved scoring with p in the middle") {
  // Single-caved votes rank the middle candidate last.
  auto weighted = test::load(three("scoring 3 1 0", "single-caved", "voter: a > b > p\n", "2"));
  CHECK_FALSE(ccwm_singlecaved_scoring(weighted).yes);
  CHECK_FALSE(brute_ccwm(weighted).yes);
  auto empty = test::load(three("scoring 3 1 0", "single-caved", "", ""));
  CHECK(ccwm_singlecaved_scoring(empty).yes);
  auto lone = test::load(three("scoring 3 1 0", "single-caved", "", "1"));
  CHECK(ccwm_singlecaved_scoring(lone).yes == brute_ccwm(lone).yes);
}

TEST_CASE("single-caved scoring with p at an end") {
  auto inst = test::load("ballots: orders\ncandidates: p a b\naxis: p a b\nattack: ccwm\nsystem: scoring 3 1 0\n"
                         "preferred: p\nsociety: single-caved\nmanipulators: 2\nvoter w=2: b > p > a\n");
  auto out = ccwm_singlecaved_scoring(inst);
  CHECK(out.yes == brute_ccwm(inst).yes);
  if (out.yes) CHECK(replay_witness(inst, out).empty());
  // alpha_1 <= 2 alpha_2 is the hard cell.
  auto flat = inst;
  flat.system = VotingSystem::scoring({3, 2, 0});
  CHECK_THROWS_AS(ccwm_singlecaved_scoring(flat), PreconditionError);
}
