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

#include "nearsp/manipulation.hpp"

#include <algorithm>

#include "nearsp/error.hpp"
#include "nearsp/structure.hpp"

namespace nearsp {
namespace {

void require_ccwm(const AttackInstance& inst) {
  if (inst.kind != AttackKind::Ccwm) throw PreconditionError("not a ccwm instance");
  if (inst.election.votes.kind != BallotKind::Orders) throw PreconditionError("ccwm needs ordinal ballots");
  if (!inst.system.is_positional()) throw PreconditionError("ccwm solvers need a positional system");
}

std::vector<std::int64_t> normalized(const AttackInstance& inst) {
  auto a = inst.system.score_vector(inst.m());
  std::int64_t last = a.back();
  for (auto& x : a) x -= last;
  return a;
}

bool is_veto_vector(const std::vector<std::int64_t>& a) {
  const int m = static_cast<int>(a.size());
  if (m < 2 || a[m - 1] >= a[0]) return false;
  for (int i = 1; i < m - 1; ++i)
    if (a[i] != a[0]) return false;
  return true;
}

bool is_plurality_like(const std::vector<std::int64_t>& a) {
  for (std::size_t i = 2; i < a.size(); ++i)
    if (a[i] != a[1]) return false;
  return true;
}

AttackOutcome replay_uniform(const AttackInstance& inst, const std::vector<CandidateId>& vote) {
  Profile prof = inst.election.votes;
  for (auto w : inst.manipulators) prof.orders.push_back({vote, w, std::nullopt});
  if (!is_winner(prof, inst.system, inst.m(), full_set(inst.m()), inst.preferred)) return AttackOutcome::no();
  Witness w;
  w.manipulator_votes.assign(inst.manipulators.size(), vote);
  return AttackOutcome::accept(std::move(w));
}

}  // namespace

std::string to_string(CcwmRoute r) {
  switch (r) {
    case CcwmRoute::VetoNeverVetoed: return "veto-never-vetoed";
    case CcwmRoute::SingleCavedScoring: return "single-caved-scoring";
    case CcwmRoute::PluralityLike: return "plurality-like";
    case CcwmRoute::OracleNpHard: return "oracle(NP-hard case)";
    case CcwmRoute::OracleUnclassified: return "oracle(no polynomial solver for this cell)";
  }
  return "?";
}

AttackOutcome ccwm_veto_never_vetoed(const AttackInstance& inst) {
  require_ccwm(inst);
  if (!is_veto_vector(normalized(inst))) throw PreconditionError("veto solver needs the veto system");
  if (!inst.axis) throw PreconditionError("veto solver needs an axis");
  const Axis& axis = *inst.axis;
  const int m = inst.m();
  const Society& s = inst.society;
  const auto& V = inst.election.votes.orders;
  if (s.kind == SocietyKind::Maverick || s.kind == SocietyKind::SinglePeaked) {
    int k = s.kind == SocietyKind::Maverick ? s.k : 0;
    if (m < k + 3) throw PreconditionError("veto with k mavericks needs m >= k+3");
    if (count_mavericks(inst.election.votes, axis) > k) throw PreconditionError("more mavericks than the bound");
  } else if ((s.kind == SocietyKind::Swoon && s.k == 1 && s.k2 == 0) || (s.kind == SocietyKind::Dodgson && s.k == 1)) {
    if (m < 5) throw PreconditionError("swoon/dodgson veto solver needs m >= 5");
    for (const auto& v : V)
      if (!society_admits(v.ranking, axis, s)) throw PreconditionError("nonmanipulator vote violates the society");
  } else {
    throw PreconditionError("veto solver needs maverick(k), swoon(1,0) or dodgson(1)");
  }
  for (const auto& v : V)
    if (v.ranking.back() == inst.preferred) return AttackOutcome::no();
  Witness w;
  w.manipulator_votes.assign(inst.manipulators.size(), sp_order(axis, inst.preferred));
  return AttackOutcome::accept(std::move(w));
}

AttackOutcome ccwm_singlecaved_scoring(const AttackInstance& inst) {
  require_ccwm(inst);
  if (inst.m() != 3) throw PreconditionError("single-caved scoring solver needs 3 candidates");
  if (inst.society.kind != SocietyKind::SingleCaved || !inst.axis)
    throw PreconditionError("single-caved scoring solver needs a single-caved society");
  auto a = normalized(inst);
  if (a[0] <= 2 * a[1]) throw PreconditionError("a1 - a3 <= 2(a2 - a3) is the NP-complete cell");
  const Axis& axis = *inst.axis;
  for (const auto& v : inst.election.votes.orders)
    if (!is_single_caved(v.ranking, axis)) throw PreconditionError("vote is not single-caved");
  const CandidateId p = inst.preferred;
  const CandidateId mid = axis.at(1);
  if (p == mid) {
    // An interior candidate is never ranked first, so it trails an endpoint
    // as soon as any weight is cast.
    if (inst.election.votes.empty() && inst.manipulators.empty()) return AttackOutcome::accept({});
    return AttackOutcome::no();
  }
  CandidateId other = axis.at(axis.pos(p) == 0 ? 2 : 0);
  return replay_uniform(inst, {p, mid, other});
}

AttackOutcome ccwm_plurality_like(const AttackInstance& inst) {
  require_ccwm(inst);
  if (!is_plurality_like(normalized(inst))) throw PreconditionError("plurality-like solver needs a2 = ... = am");
  std::vector<CandidateId> vote;
  if (!inst.axis) {
    vote.push_back(inst.preferred);
    for (CandidateId c = 0; c < inst.m(); ++c)
      if (c != inst.preferred) vote.push_back(c);
  } else if (inst.society.kind == SocietyKind::SingleCaved) {
    const Axis& axis = *inst.axis;
    int pp = axis.pos(inst.preferred);
    if (pp != 0 && pp != axis.size() - 1) throw PreconditionError("single-caved voters cannot rank an interior p first");
    vote = axis.order();
    if (pp != 0) std::reverse(vote.begin(), vote.end());
  } else {
    vote = sp_order(*inst.axis, inst.preferred);
  }
  return replay_uniform(inst, vote);
}

CcwmVerdict ccwm_dispatch(const AttackInstance& inst, const OracleCaps& caps) {
  if (inst.kind != AttackKind::Ccwm) throw PreconditionError("not a ccwm instance");
  auto oracle = [&](CcwmRoute r) {
    try {
      return CcwmVerdict{brute_ccwm(inst, caps), r};
    } catch (const CapExceeded& e) {
      throw CapExceeded(std::string("intractable cell, exceeds oracle cap (") + e.what() + ")");
    }
  };
  if (!inst.system.is_positional()) return oracle(CcwmRoute::OracleUnclassified);
  const int m = inst.m();
  const auto a = normalized(inst);
  const Society& s = inst.society;
  const bool sc_interior = s.kind == SocietyKind::SingleCaved && inst.axis &&
                           inst.axis->pos(inst.preferred) != 0 && inst.axis->pos(inst.preferred) != m - 1;

  if (is_plurality_like(a)) {
    if (sc_interior) return oracle(CcwmRoute::OracleUnclassified);
    return {ccwm_plurality_like(inst), CcwmRoute::PluralityLike};
  }
  if (is_veto_vector(a)) {
    if (s.kind == SocietyKind::Maverick || s.kind == SocietyKind::SinglePeaked) {
      int k = s.kind == SocietyKind::Maverick ? s.k : 0;
      if (m >= k + 3) return {ccwm_veto_never_vetoed(inst), CcwmRoute::VetoNeverVetoed};
      return oracle(CcwmRoute::OracleNpHard);
    }
    if ((s.kind == SocietyKind::Swoon && s.k == 1 && s.k2 == 0) || (s.kind == SocietyKind::Dodgson && s.k == 1)) {
      if (m >= 5) return {ccwm_veto_never_vetoed(inst), CcwmRoute::VetoNeverVetoed};
      return oracle(CcwmRoute::OracleNpHard);
    }
    if (s.kind == SocietyKind::None) return oracle(CcwmRoute::OracleNpHard);
    return oracle(CcwmRoute::OracleUnclassified);
  }
  if (m == 3) {
    const bool steep = a[0] > 2 * a[1];
    switch (s.kind) {
      case SocietyKind::SingleCaved:
        if (steep) return {ccwm_singlecaved_scoring(inst), CcwmRoute::SingleCavedScoring};
        return oracle(CcwmRoute::OracleNpHard);
      case SocietyKind::None:
        return oracle(CcwmRoute::OracleNpHard);
      case SocietyKind::Maverick:
        if (s.k >= 1) return oracle(CcwmRoute::OracleNpHard);
        [[fallthrough]];
      case SocietyKind::SinglePeaked:
        return oracle(steep ? CcwmRoute::OracleNpHard : CcwmRoute::OracleUnclassified);
      case SocietyKind::Swoon:
      case SocietyKind::Dodgson:
        // Every 3-candidate vote is swoon(1,0) and within one swap of SP.
        if (s.k + (s.kind == SocietyKind::Swoon ? s.k2 : 0) >= 1) return oracle(CcwmRoute::OracleNpHard);
        return oracle(CcwmRoute::OracleUnclassified);
      default:
        return oracle(CcwmRoute::OracleUnclassified);
    }
  }
  if (s.kind == SocietyKind::None) return oracle(CcwmRoute::OracleNpHard);
  return oracle(CcwmRoute::OracleUnclassified);
}

}  // namespace nearsp
