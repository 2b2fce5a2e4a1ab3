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

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "nearsp/error.hpp"
#include "nearsp/structure.hpp"
#include "nearsp/testing.hpp"

using namespace nearsp;
using R = std::vector<CandidateId>;

TEST_CASE("single-peaked and single-caved orders") {
  Axis ax({0, 1, 2, 3});
  CHECK(is_single_peaked(R{1, 2, 0, 3}, ax));
  CHECK(is_single_peaked(R{3, 2, 1, 0}, ax));
  CHECK_FALSE(is_single_peaked(R{0, 3, 1, 2}, ax));
  CHECK_FALSE(is_single_peaked(R{1, 3, 2, 0}, ax));
  // Restricted to {0, 3} anything goes.
  CHECK(is_single_peaked(R{1, 3, 2, 0}, ax, bit(0) | bit(3)));
  CHECK(is_single_caved(R{0, 3, 1, 2}, ax));
  CHECK_FALSE(is_single_caved(R{1, 2, 0, 3}, ax));
}

TEST_CASE("reversing an SP order gives an SC order") {
  testing::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    auto ax = testing::random_axis(testing::uniform(rng, 1, 7), rng);
    auto r = testing::random_sp_ranking(ax, rng);
    std::reverse(r.begin(), r.end());
    CHECK(is_single_caved(r, ax));
    // SC votes put an axis endpoint first.
    auto sc = testing::random_sc_ranking(ax, rng);
    CHECK((ax.pos(sc[0]) == 0 || ax.pos(sc[0]) == ax.size() - 1));
  }
}

TEST_CASE("intervals") {
  Axis ax({2, 0, 1, 3});
  CHECK(is_interval(0, ax));
  CHECK(is_interval(bit(0) | bit(1), ax));
  CHECK(is_interval(bit(2) | bit(0), ax));
  CHECK_FALSE(is_interval(bit(2) | bit(1), ax));
  CHECK(is_interval(full_set(4), ax));
}

TEST_CASE("every three-candidate vote is swoon and near SP") {
  Axis ax({0, 1, 2});
  R r{0, 1, 2};
  do {
    CHECK(swoon_check(r, ax, 1, 0));
    CHECK(dodgson_distance(r, ax) <= 1);
  } while (std::next_permutation(r.begin(), r.end()));
}

TEST_CASE("dodgson distance") {
  Axis ax({0, 1, 2, 3, 4});
  CHECK(dodgson_distance(R{2, 1, 3, 0, 4}, ax) == 0);
  CHECK(dodgson_distance(R{0, 4, 1, 2, 3}, ax) == 3);  // move 4 below 1, 2, 3
  CHECK(dodgson_distance(R{2, 0, 1, 3, 4}, ax) == 1);
  testing::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto a = testing::random_axis(testing::uniform(rng, 1, 7), rng);
    auto r = testing::random_ranking(a.size(), rng);
    CHECK((dodgson_distance(r, a) == 0) == is_single_peaked(r, a));
    const int k = testing::uniform(rng, 0, 3);
    CHECK(dodgson_distance(testing::random_dodgson_ranking(a, k, rng), a) <= k);
  }
}

TEST_CASE("perception flip distance") {
  Axis ax({0, 1, 2, 3});
  CHECK(perception_flip_distance(R{1, 2, 0, 3}, ax) == 0);
  // Axis 1 0 2 3 puts 0 next to 2, so one flip suffices.
  CHECK(perception_flip_distance(R{0, 2, 1, 3}, ax) == 1);
  CHECK_FALSE(perception_flip_distance(R{0, 3, 1, 2}, ax, 0).has_value());
  testing::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    auto a = testing::random_axis(testing::uniform(rng, 1, 7), rng);
    const int k = testing::uniform(rng, 0, 3);
    auto d = perception_flip_distance(testing::random_perception_ranking(a, k, rng), a, k);
    CHECK(d.has_value());
  }
}

TEST_CASE("mavericks and society membership") {
  Axis ax({0, 1, 2, 3});
  Profile p;
  p.orders = {{R{1, 2, 0, 3}, 1, std::nullopt}, {R{0, 3, 1, 2}, 4, std::nullopt}};
  CHECK(count_mavericks(p, ax) == 1);
  CHECK(is_maverick(p.orders[1], ax));
  CHECK(society_admits(R{1, 2, 0, 3}, ax, Society::sp()));
  CHECK_FALSE(society_admits(R{0, 3, 1, 2}, ax, Society::sp()));
  // Without its top choice the vote 3 > 2 > 1 is single-peaked.
  CHECK(society_admits(R{0, 3, 2, 1}, ax, Society::swoon(1, 0)));
  CHECK_FALSE(society_admits(R{0, 3, 1, 2}, ax, Society::swoon(1, 0)));
  CHECK(society_admits(R{2, 0, 1, 3}, ax, Society::dodgson(1)));
  CHECK_FALSE(society_admits(R{2, 0, 1, 3}, ax, Society::dodgson(0)));
  ApprovalVote gap{bit(0) | bit(2), 1, std::nullopt};
  CHECK(is_maverick(gap, ax));
}

TEST_CASE("sp_order fills the nearer side first") {
  Axis ax({0, 1, 2, 3});
  CHECK(sp_order(ax, 2) == R{2, 1, 0, 3});
  CHECK(sp_order(ax, 2, true) == R{2, 3, 1, 0});
  CHECK(sp_order(ax, 0) == R{0, 1, 2, 3});
}

TEST_CASE("neighborhoods on a restricted axis") {
  Axis ax({0, 1, 2, 3, 4, 5});
  CHECK(neighborhood(ax, full_set(6), 2, 1) == (bit(1) | bit(2) | bit(3)));
  CHECK(neighborhood(ax, bit(0) | bit(2) | bit(5), 2, 1) == (bit(0) | bit(2) | bit(5)));
  CHECK(neighborhood(ax, full_set(6), 0, 2) == (bit(0) | bit(1) | bit(2)));
}

TEST_CASE("locality") {
  Axis ax({0, 1, 2, 3});
  std::vector<LinearVote> sp{{R{1, 2, 0, 3}, 1, std::nullopt}, {R{3, 2, 1, 0}, 2, std::nullopt}};
  CHECK(locality_check(full_set(4), 0, sp, ax, 1, LocalityMode::Sufficient));
  CHECK(locality_check(full_set(4), 0, sp, ax, 1, LocalityMode::Exhaustive));
  // Among {1, 2, 3} the vote goes to 3, but the 1-neighborhood of 1 only
  // sees {1, 2}.
  std::vector<LinearVote> jump{{R{0, 3, 1, 2}, 1, std::nullopt}};
  CHECK_FALSE(locality_check(full_set(4), 0, jump, ax, 1, LocalityMode::Exhaustive));
  R ids(13);
  std::iota(ids.begin(), ids.end(), 0);
  CHECK_THROWS_AS(locality_check(full_set(13), 0, {}, Axis(ids), 1, LocalityMode::Exhaustive), PreconditionError);
}
