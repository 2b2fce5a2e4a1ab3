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

// Line-based text format for instances and outcomes.
//
//   ballots: orders|approval
//   candidates: p a b c
//   spoilers: d e                    (ccac)
//   axis: a p b c d e
//   attack: ccwm|ccav|ccdv|ccac|ccdc|bribery
//   system: plurality|veto|borda|approval|condorcet|scoring <ints>
//   preferred: p
//   budget: <K>                      (all but ccwm)
//   society: none|sp|single-caved|maverick <k>|swoon <k> <k'>|dodgson <k>|perceptionflip <k>
//   protected: b                     (ccdc; p implied)
//   manipulators: 3 1 4              (ccwm)
//   bribery-model: standard|marked
//   bribery-variant: plain|negative|strongnegative
//   voter [w=<int>] [flags=<csv>]: a > p > b > c
//   voter [w=<int>] [flags=<csv>]: {a, p}
//   pool [w=<int>] [flags=<csv>]: ...  (ccav)
//
// Flag names are maverick-enabled, deletable and open-to-bribe. `flags=`
// with an empty list is an explicit empty record. `#` starts a comment.

#pragma once

#include <string>
#include <string_view>

#include "nearsp/model.hpp"

namespace nearsp {

// Throws ParseError on syntax and semantic errors.
AttackInstance parse_instance(std::string_view text);
// Normalized text; parse_instance(emit_instance(x)) == x.
std::string emit_instance(const AttackInstance& inst);

// Checks the invariants parse_instance enforces; throws PreconditionError.
void validate_instance(const AttackInstance& inst);

// Outcome format: `YES`/`NO` then one witness line per action, using voter
// and pool indices (0-based, file order) and candidate names.
std::string emit_outcome(const AttackInstance& inst, const AttackOutcome& out);
AttackOutcome parse_outcome(const AttackInstance& inst, std::string_view text);

std::string format_ranking(const Election& e, std::span<const CandidateId> ranking);
std::string format_approval(const Election& e, CandSet s);

}  // namespace nearsp
