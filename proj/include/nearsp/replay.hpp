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

#include <span>
#include <string>
#include <vector>

#include "nearsp/model.hpp"

namespace nearsp {

// Re-applies a yes witness to the instance and lists every rule it breaks:
// p not winning, budget overrun, bad or repeated indices, flag or protected
// set violations, society or bribery-model constraints. Empty means valid.
// A no outcome has nothing to replay.
std::vector<std::string> replay_witness(const AttackInstance& inst, const AttackOutcome& out);

// Same for a flagged bribery plan: only open-to-bribe voters, interval
// targets, variant-legal.
std::vector<std::string> replay_flagbribe(int m, std::span<const ApprovalVote> V, CandidateId p, std::int64_t K,
                                          const Axis& axis, BriberyVariant variant, const AttackOutcome& out);

// Maverick bound implied by the society for bribery: k for maverick(k), 0
// for single-peaked, -1 (none) otherwise.
int bribery_bound(const Society& s);

}  // namespace nearsp
