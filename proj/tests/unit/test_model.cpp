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
#include "nearsp/error.hpp"
#include "nearsp/model.hpp"

using namespace nearsp;

namespace {

Profile orders(std::vector<std::pair<std::vector<CandidateId>, std::int64_t>> vs) {
  Profile p;
  for (auto& [r, w] : vs) p.orders.push_back({r, w, std::nullopt});
  return p;
}

}  // namespace

TEST_CASE("candidate sets") {
  CHECK(full_set(3) == 0b111);
  CHECK(full_set(64) == ~CandSet{0});
  CHECK(contains(bit(5), 5));
  CHECK_FALSE(contains(bit(5), 4));
  CHECK(members(0b1010) == std::vector<CandidateId>{1, 3});
  std::vector<CandidateId> ids{0, 2};
  CHECK(to_set(ids) == 0b101);
  CHECK(set_size(0b1011) == 3);
}

TEST_CASE("flag defaults") {
  LinearVote plain{{0, 1}, 1, std::nullopt};
  CHECK(is_deletable(plain));
  CHECK(is_open_to_bribe(plain));
  CHECK_FALSE(is_maverick_enabled(plain));
  LinearVote none{{0, 1}, 1, Flags{}};
  CHECK_FALSE(is_deletable(none));
  CHECK_FALSE(is_open_to_bribe(none));
  LinearVote marked{{0, 1}, 1, Flags{}.set(Flag::MaverickEnabled)};
  CHECK(is_maverick_enabled(marked));
  CHECK_FALSE(is_deletable(marked));
}

TEST_CASE("positional winners with weights and ties") {
  auto p = orders({{{0, 1, 2}, 2}, {{1, 0, 2}, 1}});
  CHECK(winners_among(p, VotingSystem::plurality(), 3, full_set(3)) == bit(0));
  CHECK(winners_among(p, VotingSystem::veto(), 3, full_set(3)) == (bit(0) | bit(1)));
  CHECK(winners_among(p, VotingSystem::borda(), 3, full_set(3)) == bit(0));
  // Restricting to {1,2} moves a's plurality points to b.
  CHECK(winners_among(p, VotingSystem::plurality(), 3, bit(1) | bit(2)) == bit(1));
  CHECK(is_winner(p, VotingSystem::scoring({1, 1, 0}), 3, full_set(3), 1));
}

TEST_CASE("scoring vectors are checked") {
  CHECK(VotingSystem::borda().score_vector(4) == std::vector<std::int64_t>{3, 2, 1, 0});
  CHECK(VotingSystem::veto().score_vector(3) == std::vector<std::int64_t>{1, 1, 0});
  CHECK_THROWS_AS(VotingSystem::scoring({2, 1}).score_vector(3), PreconditionError);
  CHECK_THROWS_AS(VotingSystem::scoring({1, 2, 0}).score_vector(3), PreconditionError);
}

TEST_CASE("approval scores") {
  std::vector<ApprovalVote> v{{0b011, 2, std::nullopt}, {0b110, 1, std::nullopt}, {0, 5, std::nullopt}};
  CHECK(approval_scores(v, 3) == std::vector<std::int64_t>{2, 3, 1});
  Profile p;
  p.kind = BallotKind::Approval;
  p.approvals = v;
  CHECK(winners_among(p, VotingSystem::approval(), 3, full_set(3)) == bit(1));
}

TEST_CASE("condorcet winner") {
  auto cyc = orders({{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}});
  CHECK_FALSE(condorcet_winner(cyc.orders, 3, full_set(3)).has_value());
  // Dropping c breaks the cycle: a beats b 2 to 1.
  CHECK(condorcet_winner(cyc.orders, 3, bit(0) | bit(1)) == 0);
  auto tie = orders({{{0, 1}, 1}, {{1, 0}, 1}});
  CHECK_FALSE(condorcet_winner(tie.orders, 2, full_set(2)).has_value());
  auto pw = pairwise_counts(cyc.orders, 3);
  CHECK(pw[0 * 3 + 1] == 2);
  CHECK(pw[1 * 3 + 0] == 1);
}

TEST_CASE("axis positions") {
  Axis a({2, 0, 1});
  CHECK(a.pos(2) == 0);
  CHECK(a.pos(1) == 2);
  CHECK(a.at(1) == 0);
}

TEST_CASE("top among active") {
  std::vector<CandidateId> r{3, 1, 0, 2};
  CHECK(top_among(r, bit(0) | bit(2)) == 0);
  CHECK(top_among(r, 0) == -1);
}
