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

#include <string>

#include "nearsp/model.hpp"
#include "nearsp/oracle.hpp"

namespace nearsp {

// Veto CCWM where some interior candidate can never be vetoed: under
// maverick(k) with m >= k+3, or swoon(1,0) / dodgson(1) with m >= 5. An SP
// society counts as maverick(0). p can win iff no nonmanipulator vetoes p;
// the witness has every manipulator cast the single-peaked vote peaked at p.
AttackOutcome ccwm_veto_never_vetoed(const AttackInstance& inst);

// Three-candidate scoring CCWM in a single-caved society with
// a1 - a3 > 2 (a2 - a3). A middle p wins only when nobody votes at all;
// an endpoint p wins iff it wins with every manipulator voting
// p > middle > other.
AttackOutcome ccwm_singlecaved_scoring(const AttackInstance& inst);

// Scoring CCWM with a2 = ... = am: every manipulator ranks p first.
AttackOutcome ccwm_plurality_like(const AttackInstance& inst);

enum class CcwmRoute { VetoNeverVetoed, SingleCavedScoring, PluralityLike, OracleNpHard, OracleUnclassified };
std::string to_string(CcwmRoute r);

struct CcwmVerdict {
  AttackOutcome outcome;
  CcwmRoute route = CcwmRoute::OracleNpHard;
};

// Routes to a polynomial solver when the instance sits in a tractable cell,
// otherwise to brute_ccwm. OracleNpHard marks cells known to be
// NP-complete; OracleUnclassified marks cells this library has no solver for.
// Throws CapExceeded when the oracle route is too large.
CcwmVerdict ccwm_dispatch(const AttackInstance& inst, const OracleCaps& caps = {});

}  // namespace nearsp
