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

#include <cstdint>
#include <span>

#include "nearsp/model.hpp"

namespace nearsp {

struct BriberyOptions {
  std::uint64_t enum_cap = std::uint64_t{1} << 20;
};

// Bribes at most K open-to-bribe voters, each to an axis interval allowed by
// the variant. Open voters must be axis intervals of weight 1; the others
// only contribute scores.
AttackOutcome flagbribe_approval(int m, std::span<const ApprovalVote> V, CandidateId p, std::int64_t K,
                                 const Axis& axis, BriberyVariant variant);

// Target a bribed voter is moved to when its ballot is free to be anything.
CandSet canonical_target(BriberyVariant variant, CandSet before, CandidateId p);

// Approval bribery with at most `bound` maverick-enabled voters (marked
// model) or inconsistent voters (standard model).
AttackOutcome maverick_bribery_approval(const AttackInstance& inst, int bound, const BriberyOptions& opts = {});

}  // namespace nearsp
