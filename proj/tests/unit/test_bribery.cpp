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
#include "nearsp/bribery.hpp"
#include "nearsp/error.hpp"
#include "nearsp/oracle.hpp"
#include "nearsp/replay.hpp"

using namespace nearsp;

namespace {

std::vector<ApprovalVote> ballots(std::initializer_list<CandSet> sets) {
  std::vector<ApprovalVote> v;
  for (CandSet s : sets) v.push_back({s, 1, std::nullopt});
  return v;
}

}  // namespace

TEST_CASE("canonical bribe targets") {
  const CandidateId p = 1;
  CHECK(canonical_target(BriberyVariant::Plain, bit(0), p) == bit(1));
  CHECK(canonical_target(BriberyVariant::Negative, bit(0) | bit(1), p) == bit(1));
  CHECK(canonical_target(BriberyVariant::Negative, bit(0), p) == 0);
  CHECK(canonical_target(BriberyVariant::StrongNegative, bit(1), p) == 0);
}

TEST_CASE("flag bribery variants") {
  Axis axis({0, 1, 2});
  const CandidateId a = 0, b = 1;
  auto v = ballots({bit(b), bit(b), bit(a)});
  for (auto variant : {BriberyVariant::Plain, BriberyVariant::Negative, BriberyVariant::StrongNegative}) {
    CAPTURE(to_string(variant));
    auto out = flagbribe_approval(3, v, a, 1, axis, variant);
    CHECK(out.yes == brute_flagbribe(3, v, a, 1, axis, variant).yes);
    if (out.yes) CHECK(replay_flagbribe(3, v, a, 1, axis, variant, out).empty());
  }
  // Emptying one b-voter ties a with b.
  CHECK(flagbribe_approval(3, v, a, 1, axis, BriberyVariant::StrongNegative).yes);
  auto three = ballots({bit(b), bit(b), bit(b), bit(a)});
  CHECK_FALSE(flagbribe_approval(3, three, a, 1, axis, BriberyVariant::StrongNegative).yes);
  CHECK(flagbribe_approval(3, three, a, 2, axis, BriberyVariant::StrongNegative).yes);
  // Closed voters cannot be bribed.
  for (auto& x : three) x.flags = Flags{};
  CHECK_FALSE(flagbribe_approval(3, three, a, 3, axis, BriberyVariant::Plain).yes);
}

TEST_CASE("maverick bribery in both models") {
  const std::string base =
      "ballots: approval\ncandidates: a b c d e\naxis: a b c d e\nattack: bribery\nsystem: approval\n"
      "preferred: c\nbudget: 2\nsociety: maverick 1\n"
      "voter: {a, b}\nvoter: {a, b, c}\nvoter flags=maverick-enabled: {a, e}\nvoter: {d, e}\nvoter: {d}\n";
  for (const char* model : {"standard", "marked"})
    for (const char* variant : {"plain", "negative", "strongnegative"}) {
      CAPTURE(model);
      CAPTURE(variant);
      auto inst = test::load(base + "bribery-model: " + model + "\nbribery-variant: " + variant + "\n");
      auto out = maverick_bribery_approval(inst, bribery_bound(inst.society));
      CHECK(out.yes == brute_bribery(inst).yes);
      if (out.yes) CHECK(replay_witness(inst, out).empty());
    }
}

TEST_CASE("bribery bound from the society") {
  CHECK(bribery_bound(Society::maverick(3)) == 3);
  CHECK(bribery_bound(Society::sp()) == 0);
  CHECK(bribery_bound(Society::none()) < 0);
}
