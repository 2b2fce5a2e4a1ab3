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
#include "nearsp/control.hpp"
#include "nearsp/oracle.hpp"
#include "nearsp/replay.hpp"
#include "nearsp/structure.hpp"
#include "nearsp/testing.hpp"

using namespace nearsp;

namespace {

AttackOutcome checked(const AttackInstance& inst, const AttackOutcome& out) {
  CHECK(out.yes == brute_control(inst).yes);
  if (out.yes) CHECK(replay_witness(inst, out).empty());
  return out;
}

}  // namespace

TEST_CASE("approval voter addition on an SP axis") {
  const std::string base =
      "ballots: approval\ncandidates: a b c\naxis: a b c\nattack: ccav\nsystem: approval\npreferred: a\n"
      "society: sp\nvoter: {b}\nvoter: {b, c}\npool: {a}\npool: {a}\npool: {a, b}\n";
  auto two = test::load(base + "budget: 2\n");
  auto out = checked(two, sp_approval_ccav(3, two.election.votes.approvals, two.pool.approvals, 0, 2, *two.axis));
  REQUIRE(out.yes);
  CHECK(out.witness->added_voters == std::vector<int>{0, 1});
  auto one = test::load(base + "budget: 1\n");
  checked(one, sp_approval_ccav(3, one.election.votes.approvals, one.pool.approvals, 0, 1, *one.axis));
  CHECK_FALSE(sp_approval_ccav(3, one.election.votes.approvals, one.pool.approvals, 0, 1, *one.axis).yes);
}

TEST_CASE("approval voter deletion respects flags") {
  const std::string base =
      "ballots: approval\ncandidates: a b c d\naxis: a b c d\nattack: ccdv\nsystem: approval\npreferred: b\n"
      "budget: 1\nsociety: sp\nvoter flags=: {c}\nvoter: {b, c}\nvoter: {a, b}\n";
  auto open = test::load(base + "voter flags=deletable: {c}\n");
  auto out = checked(open, sp_approval_ccdv_flagged(4, open.election.votes.approvals, 1, 1, *open.axis));
  REQUIRE(out.yes);
  CHECK(out.witness->deleted_voters == std::vector<int>{3});
  auto locked = test::load(base + "voter flags=: {c}\n");
  CHECK_FALSE(checked(locked, sp_approval_ccdv_flagged(4, locked.election.votes.approvals, 1, 1, *locked.axis)).yes);
}

TEST_CASE("demaverickify keeps approval scores") {
  testing::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const int m = testing::uniform(rng, 1, 7);
    auto axis = testing::random_axis(m, rng);
    std::vector<ApprovalVote> v;
    for (int j = 0; j < 6; ++j) v.push_back({testing::random_set(m, rng), testing::uniform(rng, 1, 4), std::nullopt});
    auto out = demaverickify_approval(v, axis);
    CHECK(approval_scores(out, m) == approval_scores(v, m));
    for (const auto& x : out) CHECK(is_interval(x.approved, axis));
  }
}

TEST_CASE("condorcet voter addition") {
  const std::string base =
      "ballots: orders\ncandidates: a b c\naxis: a b c\nattack: ccav\nsystem: condorcet\npreferred: b\n"
      "society: maverick 1\nvoter: a > b > c\nvoter: c > b > a\npool: b > a > c\npool: a > c > b\n";
  auto one = test::load(base + "budget: 1\n");
  auto out = checked(one, maverick_control_condorcet(one, 1));
  REQUIRE(out.yes);
  CHECK(out.witness->added_voters == std::vector<int>{0});
  auto none = test::load(base + "budget: 0\n");
  CHECK_FALSE(checked(none, maverick_control_condorcet(none, 1)).yes);
}

TEST_CASE("condorcet voter deletion") {
  auto inst = test::load(
      "ballots: orders\ncandidates: a b c\naxis: a b c\nattack: ccdv\nsystem: condorcet\npreferred: c\nbudget: 1\n"
      "society: sp\nvoter: a > b > c\nvoter: c > b > a\nvoter: b > c > a\n");
  // Every single deletion leaves c at best tied with b.
  checked(inst, maverick_control_condorcet(inst, 0));
  auto part = partition_condorcet(inst.election.votes.orders, *inst.axis, 2, false);
  CHECK(part.left.size() == 2);
  CHECK(part.top == std::vector<int>{1});
}

TEST_CASE("k-local minimum additions") {
  Axis axis({3, 0, 1, 2});  // x a p b
  std::vector<LinearVote> v{{{0, 3, 1, 2}, 1, std::nullopt},
                            {{3, 0, 1, 2}, 1, std::nullopt},
                            {{1, 0, 2, 3}, 1, std::nullopt}};
  const CandSet C = bit(0) | bit(1) | bit(2), A = bit(3);
  // Without x, a holds two votes.
  auto r = klocal_min_additions(C, A, v, axis, 1, 1);
  CHECK(r.additions == 1);
  CHECK(r.added == bit(3));
  CHECK(klocal_min_additions(C, A, v, axis, 1, 2).additions == 0);
  CHECK_FALSE(klocal_min_additions(C, A, v, axis, 1, 0).additions.has_value());
  CHECK(ccac_plurality_klocal(C, A, v, 1, 1, axis, 1).yes);
  CHECK_FALSE(ccac_plurality_klocal(C, A, v, 1, 0, axis, 1).yes);
}

TEST_CASE("candidate deletion with protected rivals") {
  const std::string base =
      "ballots: orders\ncandidates: a p b\naxis: a p b\nattack: ccdc\nsystem: plurality\npreferred: p\nbudget: 1\n"
      "society: sp\nvoter w=2: a > p > b\nvoter w=2: b > p > a\nvoter: p > a > b\n";
  auto free = test::load(base);
  auto out = checked(free, ccdc_plurality_klocal(free.registered(), free.election.votes.orders, 1, 1, *free.axis, 1, 0));
  CHECK(out.yes);
  auto tied = test::load(base + "protected: a b\n");
  CHECK_FALSE(checked(tied, ccdc_plurality_klocal(tied.registered(), tied.election.votes.orders, 1, 1, *tied.axis, 1,
                                                  tied.protected_set))
                  .yes);
}

TEST_CASE("neighborhood family holds p's exact neighborhoods") {
  Axis axis({0, 1, 2, 3, 4});
  auto fam = neighborhood_family(bit(2), bit(1) | bit(3) | bit(4), 2, 1, axis);
  for (CandSet d : fam) {
    CHECK(contains(d, 2));
    CHECK(set_size(d) <= 3);
  }
  CHECK(fam.size() == 6);  // left in {none, 1}, right in {none, 3, 4}
}

TEST_CASE("single-caved candidate control") {
  auto inst = test::load(
      "ballots: orders\ncandidates: a p b c\naxis: a p b c\nattack: ccdc\nsystem: plurality\npreferred: p\n"
      "budget: 2\nsociety: single-caved\nvoter w=2: a > c > b > p\nvoter: c > a > p > b\nvoter: c > a > b > p\n");
  checked(inst, singlecaved_control_plurality(inst));
}
