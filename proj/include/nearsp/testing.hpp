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

// Seeded random generators shared by the unit tests, the acceptance binary
// and the `bench` subcommand.

#include <cstdint>
#include <random>
#include <vector>

#include "nearsp/model.hpp"

namespace nearsp::testing {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

std::vector<std::string> names(int m);
Axis random_axis(int m, Rng& rng);
std::vector<CandidateId> random_ranking(int m, Rng& rng);
// Peak chosen uniformly, then each step extends left or right at random.
std::vector<CandidateId> random_sp_ranking(const Axis& axis, Rng& rng);
std::vector<CandidateId> random_sc_ranking(const Axis& axis, Rng& rng);
// SP ranking followed by up to k random adjacent swaps.
std::vector<CandidateId> random_dodgson_ranking(const Axis& axis, int k, Rng& rng);
// SP with respect to the axis after up to k random adjacent swaps of it.
std::vector<CandidateId> random_perception_ranking(const Axis& axis, int k, Rng& rng);
CandSet random_set(int m, Rng& rng);
// Nonempty unless allow_empty and a coin says so.
CandSet random_interval(const Axis& axis, Rng& rng, bool allow_empty = true);
// Approval set that is not an axis interval; needs m >= 3.
CandSet random_non_interval(const Axis& axis, Rng& rng);

// Instance skeleton with names, axis and an empty profile of `kind`.
AttackInstance blank(AttackKind kind, int m, BallotKind ballots, const VotingSystem& sys, Rng& rng);

}  // namespace nearsp::testing
