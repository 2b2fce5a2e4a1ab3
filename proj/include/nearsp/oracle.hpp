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

// Exhaustive reference solvers. They try every admissible action and are
// meant for small instances only.

#pragma once

#include <cstdint>

#include "nearsp/model.hpp"

namespace nearsp {

struct OracleCaps {
  int max_candidates = 6;
  int max_voters = 8;
  int max_manipulators = 4;
  std::uint64_t max_subsets = std::uint64_t{1} << 22;

  // Only the enumeration size binds. Used for reduction gadgets, which are
  // large but have narrow search spaces.
  static OracleCaps relaxed() { return {kMaxCandidates, 1 << 20, 64, std::uint64_t{1} << 22}; }
};

// Manipulator ballots range over the society's admissible votes. For
// positional systems votes giving every candidate the same points are
// interchangeable, so one representative per score pattern is tried (a
// non-maverick one when the pattern has any). Manipulators count toward a
// maverick bound.
AttackOutcome brute_ccwm(const AttackInstance& inst, const OracleCaps& caps = {});
// CCAV, CCDV (deletable voters only), CCAC, CCDC (protected set honored).
AttackOutcome brute_control(const AttackInstance& inst, const OracleCaps& caps = {});
// Approval bribery under the instance's model and variant. Society
// maverick(k) gives the bound k, sp gives 0, none leaves it open.
AttackOutcome brute_bribery(const AttackInstance& inst, const OracleCaps& caps = {});
// Bribery where only open-to-bribe voters may be bribed, each to an axis
// interval legal for the variant.
AttackOutcome brute_flagbribe(int m, const std::vector<ApprovalVote>& votes, CandidateId p, std::int64_t budget,
                              const Axis& axis, BriberyVariant variant, const OracleCaps& caps = {});
// Dispatches on the attack kind.
AttackOutcome brute_solve(const AttackInstance& inst, const OracleCaps& caps = {});

}  // namespace nearsp
