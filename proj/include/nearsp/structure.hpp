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

#pragma once

#include <optional>
#include <span>

#include "nearsp/model.hpp"

namespace nearsp {

struct ConsistencyReport {
  bool is_sp = false;
  bool is_sc = false;
  bool is_approval_interval = false;        // approval ballots only
  std::optional<int> dodgson_distance;      // orders only
  std::optional<int> perception_flip_distance;  // orders only; empty past kmax
  bool perception_exceeds = false;
};

// Candidates not in `active` are skipped, so the checks run against the
// axis restricted to `active`.
bool is_single_peaked(std::span<const CandidateId> ranking, const Axis& axis, CandSet active = ~CandSet{0});
bool is_single_caved(std::span<const CandidateId> ranking, const Axis& axis, CandSet active = ~CandSet{0});
bool is_interval(CandSet approved, const Axis& axis);

ConsistencyReport classify_vote(const LinearVote& v, const Axis& axis);
ConsistencyReport classify_vote(const ApprovalVote& v, const Axis& axis);
// classify_vote plus both distances.
ConsistencyReport full_report(const LinearVote& v, const Axis& axis, int kmax = 6);

bool is_maverick(const LinearVote& v, const Axis& axis);
bool is_maverick(const ApprovalVote& v, const Axis& axis);
int count_mavericks(const Profile& votes, const Axis& axis);
int count_mavericks(const Election& e, const Axis& axis);

bool swoon_check(std::span<const CandidateId> ranking, const Axis& axis, int k, int k2);
int dodgson_distance(std::span<const CandidateId> ranking, const Axis& axis);
// Least number of adjacent axis swaps after which the vote is single-peaked;
// empty when that exceeds kmax.
std::optional<int> perception_flip_distance(std::span<const CandidateId> ranking, const Axis& axis, int kmax = 6);

// Per-vote membership test for a society. Maverick societies admit every
// vote here; their bound is a profile-level count.
bool society_admits(std::span<const CandidateId> ranking, const Axis& axis, const Society& s);

// Single-peaked order with `peak` first: the remaining candidates to the
// left of the peak nearest first, then those to the right. With
// right_first the two sides are swapped. Only `active` candidates appear.
std::vector<CandidateId> sp_order(const Axis& axis, CandidateId peak, bool right_first = false,
                                  CandSet active = ~CandSet{0});

// N(axis, within, c, k): members of `within` at most k steps from c on the
// axis restricted to `within`.
CandSet neighborhood(const Axis& axis, CandSet within, CandidateId c, int k);

enum class LocalityMode { Sufficient, Exhaustive };
// k-locality of the plurality election over registered ∪ spoilers.
bool locality_check(CandSet registered, CandSet spoilers, std::span<const LinearVote> votes, const Axis& axis,
                    int k, LocalityMode mode);

}  // namespace nearsp
