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

using namespace nearsp;

namespace {

const char* kApproval = R"(# comment line
ballots: approval
candidates: a b c d
axis: a b c d
attack: ccdv
system: approval
preferred: b
budget: 1
society: maverick 2
voter w=2: {a, b}
voter flags=: {c}
voter flags=deletable,open-to-bribe: {}
)";

const char* kOrders = R"(ballots: orders
candidates: p a b
spoilers: x
axis: a p x b
attack: ccac
system: scoring 3 1 0 0
preferred: p
budget: 2
society: dodgson 1
voter w=3: a > p > x > b
voter: x > b > p > a
)";

}  // namespace

TEST_CASE("approval instance parses") {
  auto inst = test::load(kApproval);
  CHECK(inst.kind == AttackKind::Ccdv);
  CHECK(inst.m() == 4);
  CHECK(inst.preferred == 1);
  CHECK(inst.society == Society::maverick(2));
  REQUIRE(inst.election.votes.approvals.size() == 3);
  CHECK(inst.election.votes.approvals[0].approved == 0b0011);
  CHECK(inst.election.votes.approvals[0].weight == 2);
  CHECK_FALSE(inst.election.votes.approvals[0].flags.has_value());
  CHECK(inst.election.votes.approvals[1].flags == Flags{});
  CHECK(inst.election.votes.approvals[2].approved == 0);
  CHECK(is_deletable(inst.election.votes.approvals[2]));
}

TEST_CASE("spoilers follow the registered candidates") {
  auto inst = test::load(kOrders);
  CHECK(inst.m() == 4);
  CHECK(inst.spoilers == bit(3));
  CHECK(inst.registered() == 0b0111);
  CHECK(inst.system == VotingSystem::scoring({3, 1, 0, 0}));
  CHECK(inst.axis->order() == std::vector<CandidateId>{1, 0, 3, 2});
}

TEST_CASE("emit then parse is the identity") {
  for (const char* text : {kApproval, kOrders}) {
    auto a = test::load(text);
    auto b = parse_instance(emit_instance(a));
    CHECK(a == b);
    CHECK(emit_instance(b) == emit_instance(a));
  }
}

TEST_CASE("parse errors carry line numbers") {
  std::string bad = kOrders;
  bad.replace(bad.find("voter: x > b > p > a"), 20, "voter: x > b > q > a");
  try {
    parse_instance(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 11);
  }
  CHECK_THROWS_AS(parse_instance("ballots: orders\nfrobnicate: 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("ballots: orders\ncandidates: a b\nattack: ccdv\nsystem: plurality\npreferred: a\n"),
                  ParseError);  // no budget
  CHECK_THROWS_AS(parse_instance(std::string(kOrders) + "voter w=0: a > p > x > b\n"), ParseError);
  CHECK_THROWS_AS(parse_instance(std::string(kOrders) + "voter: a > p > b\n"), Error);
}

TEST_CASE("outcome text round trip") {
  auto inst = test::load(kOrders);
  Witness w;
  w.added_candidates = {3};
  auto out = AttackOutcome::accept(w);
  const std::string text = emit_outcome(inst, out);
  CHECK(text == "YES\nadd-candidate x\n");
  CHECK(parse_outcome(inst, text) == out);
  CHECK(emit_outcome(inst, AttackOutcome::no()) == "NO\n");
  CHECK(parse_outcome(inst, "NO\n") == AttackOutcome::no());
}

TEST_CASE("bribery outcome round trip") {
  auto inst = test::load(kApproval);
  Witness w;
  w.bribes = {{0, bit(1)}, {2, 0}};
  auto out = AttackOutcome::accept(w);
  CHECK(parse_outcome(inst, emit_outcome(inst, out)) == out);
}
