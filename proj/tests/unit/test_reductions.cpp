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

#include <numeric>

#include "doctest.h"
#include "nearsp/error.hpp"
#include "nearsp/oracle.hpp"
#include "nearsp/reductions.hpp"
#include "nearsp/structure.hpp"

using namespace nearsp;

TEST_CASE("partition solver") {
  PartitionInstance yes{{1, 2, 3, 4}};
  auto sol = solve_partition(yes);
  REQUIRE(sol);
  std::int64_t sum = 0;
  for (int i : *sol) sum += yes.values[i];
  CHECK(sum == yes.half());
  CHECK_FALSE(solve_partition(PartitionInstance{{1, 2, 5}}));
}

TEST_CASE("x3c solver") {
  X3CInstance yes{6, {{0, 1, 2}, {1, 2, 3}, {2, 4, 5}, {3, 4, 5}}};
  auto sol = solve_x3c(yes);
  REQUIRE(sol);
  CHECK(*sol == std::vector<int>{0, 3});
  CHECK_FALSE(solve_x3c(X3CInstance{6, {{0, 1, 2}, {2, 3, 4}, {1, 4, 5}}}));
}

TEST_CASE("source formats round trip") {
  auto p = parse_partition("# four values\nvalues: 1 2 3 4\n");
  CHECK(p.values == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(parse_partition(emit_partition(p)).values == p.values);
  auto x = parse_x3c("base: 6\nset: 1 2 3\nset: 4 5 6\n");
  CHECK(x.sets[1] == std::array<int, 3>{3, 4, 5});
  auto y = parse_x3c(emit_x3c(x));
  CHECK(y.base == x.base);
  CHECK(y.sets == x.sets);
  CHECK_THROWS(parse_x3c("base: 6\nset: 1 2 9\n"));
}

TEST_CASE("gadget kind names") {
  for (auto k : {PartitionKind::Scoring1Mav, PartitionKind::VetoKMav, PartitionKind::VetoSwoon4,
                 PartitionKind::VetoDodgson4, PartitionKind::SingleCaved})
    CHECK(parse_partition_kind(to_string(k)) == k);
  for (auto k : {X3CKind::CcacSwoon, X3CKind::CcdcSwoon, X3CKind::CcacDodgsonM2, X3CKind::CcdcDodgsonM2,
                 X3CKind::CcacPerceptionM2, X3CKind::CcdcPerceptionM2})
    CHECK(parse_x3c_kind(to_string(k)) == k);
}

TEST_CASE("partition gadgets agree with the source") {
  for (auto k : {PartitionKind::Scoring1Mav, PartitionKind::VetoKMav, PartitionKind::VetoSwoon4,
                 PartitionKind::VetoDodgson4, PartitionKind::SingleCaved}) {
    CAPTURE(to_string(k));
    for (const auto& src : {PartitionInstance{{1, 2, 3, 4}}, PartitionInstance{{1, 3}}, PartitionInstance{{1, 2, 5}}}) {
      auto inst = partition_to_ccwm(k, src);
      auto rep = verify_reduction(src, inst);
      CHECK(rep.agree());
      CHECK(rep.society_ok);
    }
  }
}

TEST_CASE("x3c padding") {
  X3CInstance one{3, {{0, 1, 2}}};
  auto padded = pad_x3c(one, 2, 4);
  CHECK(padded.k() == 4);
  CHECK(padded.sets.size() == 4);
  CHECK(solve_x3c(padded).has_value());
}

TEST_CASE("ccac swoon gadget scores") {
  X3CInstance src{6, {{0, 1, 2}, {1, 2, 3}, {2, 4, 5}, {3, 4, 5}}};
  auto inst = x3c_to_control(X3CKind::CcacSwoon, src);
  const std::int64_t n = 4, k = 2;
  auto s = plurality_scores(inst.election.votes.orders, inst.m(), inst.registered());
  CHECK(s[0] == 2 * n * k + k);
  CHECK(s[1] == 2 * n * k);
  for (int i = 0; i < 6; ++i) CHECK(s[2 + i] == 2 * n * k + 2 * k);
  CHECK(inst.budget == k);
  CHECK(society_holds(inst));
  auto rep = verify_reduction(src, inst);
  CHECK(rep.source_yes);
  CHECK(rep.agree());
}

TEST_CASE("epsilon padding keeps decisions") {
  X3CInstance src{6, {{0, 1, 2}, {1, 2, 3}, {2, 4, 5}}};
  for (auto kind : {X3CKind::CcacSwoon, X3CKind::CcdcSwoon}) {
    auto inst = x3c_to_control(kind, src);
    auto padded = pad_for_epsilon(inst, 2);
    CHECK(padded.election.votes.size() > inst.election.votes.size());
    CHECK(brute_control(padded, OracleCaps::relaxed()).yes == brute_control(inst, OracleCaps::relaxed()).yes);
  }
}
