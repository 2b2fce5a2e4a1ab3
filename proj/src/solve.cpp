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

#include "nearsp/solve.hpp"

#include <functional>

#include "nearsp/bribery.hpp"
#include "nearsp/control.hpp"
#include "nearsp/error.hpp"
#include "nearsp/io.hpp"
#include "nearsp/manipulation.hpp"
#include "nearsp/replay.hpp"
#include "nearsp/structure.hpp"

namespace nearsp {

int locality_radius(const Society& s) {
  switch (s.kind) {
    case SocietyKind::SinglePeaked: return 1;
    case SocietyKind::Dodgson:
    case SocietyKind::PerceptionFlip: return s.k + 1;
    default: return 0;
  }
}

namespace {

SolveResult oracle(const AttackInstance& inst, const SolveOptions& opts, const std::string& why) {
  try {
    return {brute_solve(inst, opts.caps), "oracle(" + why + ")"};
  } catch (const CapExceeded& e) {
    throw CapExceeded("no polynomial solver for this cell (" + why + ") and " + e.what());
  }
}

SolveResult fast(const AttackInstance& inst, const SolveOptions& opts, const std::string& name,
                 const std::function<AttackOutcome()>& f) {
  try {
    return {f(), name};
  } catch (const PreconditionError& e) {
    if (!opts.fallback) throw;
    return oracle(inst, opts, name + " precondition: " + e.what());
  }
}

int maverick_bound(const Society& s) { return s.kind == SocietyKind::Maverick ? s.k : 0; }

bool sp_or_maverick(const Society& s) {
  return s.kind == SocietyKind::SinglePeaked || s.kind == SocietyKind::Maverick;
}

}  // namespace

SolveResult solve(const AttackInstance& inst, const SolveOptions& opts) {
  validate_instance(inst);
  const Society& s = inst.society;
  const SystemKind sys = inst.system.kind;

  switch (inst.kind) {
    case AttackKind::Ccwm: {
      auto v = ccwm_dispatch(inst, opts.caps);
      return {v.outcome, to_string(v.route)};
    }
    case AttackKind::Ccav:
    case AttackKind::Ccdv: {
      const bool adding = inst.kind == AttackKind::Ccav;
      ControlOptions co;
      co.enum_cap = opts.enum_cap;
      if (sys == SystemKind::Approval && s.kind == SocietyKind::SinglePeaked) {
        const auto& V = inst.election.votes.approvals;
        if (adding)
          return fast(inst, opts, "sp_approval_ccav", [&] {
            return sp_approval_ccav(inst.m(), V, inst.pool.approvals, inst.preferred, inst.budget, *inst.axis);
          });
        return fast(inst, opts, "sp_approval_ccdv_flagged", [&] {
          return sp_approval_ccdv_flagged(inst.m(), V, inst.preferred, inst.budget, *inst.axis);
        });
      }
      if (sys == SystemKind::Approval && s.kind == SocietyKind::Maverick)
        return fast(inst, opts, "maverick_control_approval",
                    [&] { return maverick_control_approval(inst, s.k, true, co); });
      if (sys == SystemKind::Condorcet && sp_or_maverick(s))
        return fast(inst, opts, "maverick_control_condorcet",
                    [&] { return maverick_control_condorcet(inst, maverick_bound(s), co); });
      return oracle(inst, opts, "unclassified voter control cell");
    }
    case AttackKind::Ccac:
    case AttackKind::Ccdc: {
      if (sys != SystemKind::Plurality) return oracle(inst, opts, "candidate control beyond plurality");
      const bool adding = inst.kind == AttackKind::Ccac;
      ControlOptions co;
      co.enum_cap = opts.enum_cap;
      if (s.kind == SocietyKind::SingleCaved)
        return fast(inst, opts, "singlecaved_control_plurality", [&] { return singlecaved_control_plurality(inst); });
      if (s.kind == SocietyKind::Maverick)
        return fast(inst, opts, "kmaverick_control_plurality", [&] { return kmaverick_control_plurality(inst, s.k, co); });
      if (const int k = locality_radius(s); k > 0) {
        const auto& V = inst.election.votes.orders;
        const std::string name = (adding ? "ccac" : "ccdc") + std::string("_plurality_klocal(k=") + std::to_string(k) + ")";
        return fast(inst, opts, name, [&] {
          for (const auto& v : V)
            if (!society_admits(v.ranking, *inst.axis, s)) throw PreconditionError("a vote lies outside the society");
          if (adding)
            return ccac_plurality_klocal(inst.registered(), inst.spoilers, V, inst.preferred, inst.budget, *inst.axis, k);
          return ccdc_plurality_klocal(inst.registered(), V, inst.preferred, inst.budget, *inst.axis, k,
                                       inst.protected_set);
        });
      }
      return oracle(inst, opts, "unclassified candidate control cell");
    }
    case AttackKind::Bribery: {
      if (sys == SystemKind::Approval && sp_or_maverick(s)) {
        BriberyOptions bo;
        bo.enum_cap = opts.enum_cap;
        return fast(inst, opts, "maverick_bribery_approval",
                    [&] { return maverick_bribery_approval(inst, bribery_bound(s), bo); });
      }
      return oracle(inst, opts, "unclassified bribery cell");
    }
  }
  throw PreconditionError("unknown attack kind");
}

}  // namespace nearsp
