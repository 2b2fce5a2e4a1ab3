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

#include <algorithm>

#include "nearsp/control.hpp"
#include "nearsp/error.hpp"
#include "nearsp/structure.hpp"

namespace nearsp {
namespace {

void require_plurality(const AttackInstance& inst) {
  if (inst.election.votes.kind != BallotKind::Orders || inst.system.kind != SystemKind::Plurality)
    throw PreconditionError("candidate control needs ordinal ballots and plurality");
  if (!inst.axis) throw PreconditionError("candidate control needs an axis");
  if (inst.kind != AttackKind::Ccac && inst.kind != AttackKind::Ccdc)
    throw PreconditionError("candidate control handles ccac and ccdc");
  if (contains(inst.spoilers, inst.preferred)) throw PreconditionError("p must be registered");
}

// Candidates of `within` that v ranks above c.
CandSet above(const LinearVote& v, CandidateId c, CandSet within) {
  CandSet s = 0;
  for (CandidateId x : v.ranking) {
    if (x == c) break;
    if (contains(within, x)) s |= bit(x);
  }
  return s;
}

std::uint64_t power_saturating(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace

AttackOutcome kmaverick_control_plurality(const AttackInstance& inst, int k, const ControlOptions& opts) {
  require_plurality(inst);
  const Axis& axis = *inst.axis;
  const CandidateId p = inst.preferred;
  const auto& V = inst.election.votes.orders;
  const bool adding = inst.kind == AttackKind::Ccac;
  const CandSet C = inst.registered();
  const CandSet A = adding ? inst.spoilers : 0;
  const CandSet U = C | A;

  std::vector<int> mav;
  std::vector<LinearVote> base;
  for (int i = 0; i < static_cast<int>(V.size()); ++i) {
    if (is_maverick(V[i], axis)) mav.push_back(i);
    else base.push_back(V[i]);
  }
  if (static_cast<int>(mav.size()) > k) throw PreconditionError("more mavericks than the bound");
  const auto cands = members(U);
  const int n = static_cast<int>(cands.size());
  const int kk = static_cast<int>(mav.size());
  if (power_saturating(n, kk) > opts.enum_cap) throw CapExceeded("top-vector enumeration exceeds cap");

  // b[i] is maverick i's top in the final election.
  std::vector<int> digit(kk, 0);
  while (true) {
    std::vector<CandidateId> b(kk);
    CandSet Bset = 0;
    for (int i = 0; i < kk; ++i) b[i] = cands[digit[i]], Bset |= bit(b[i]);

    bool valid = true;
    CandSet bad = 0;
    for (int i = 0; i < kk && valid; ++i) {
      CandSet ab = above(V[mav[i]], b[i], adding ? U : C);
      if (adding && (ab & C)) valid = false;
      bad |= ab;
    }
    if (valid && (bad & Bset)) valid = false;
    if (valid && !adding && (bad & (inst.protected_set | bit(p)))) valid = false;

    if (valid) {
      std::vector<LinearVote> Vp = base;
      for (int i = 0; i < kk; ++i) {
        LinearVote v = V[mav[i]];
        v.ranking = sp_order(axis, b[i]);
        Vp.push_back(std::move(v));
      }
      if (adding) {
        const CandSet forced = Bset & A;
        const std::int64_t K1 = inst.budget - set_size(forced);
        if (K1 >= 0) {
          auto sub = ccac_plurality_klocal(C | forced, A & ~bad & ~forced, Vp, p, K1, axis, 1);
          if (sub.yes) {
            Witness w;
            CandSet added = forced | to_set(sub.witness->added_candidates);
            w.added_candidates = members(added);
            return AttackOutcome::accept(std::move(w));
          }
        }
      } else {
        const std::int64_t K1 = inst.budget - set_size(bad);
        if (K1 >= 0) {
          auto sub = ccdc_plurality_klocal(C & ~bad, Vp, p, K1, axis, 1, inst.protected_set | Bset | bit(p));
          if (sub.yes) {
            Witness w;
            CandSet gone = bad | to_set(sub.witness->deleted_candidates);
            w.deleted_candidates = members(gone);
            return AttackOutcome::accept(std::move(w));
          }
        }
      }
    }

    int i = kk - 1;
    while (i >= 0 && digit[i] == n - 1) digit[i--] = 0;
    if (i < 0) break;
    ++digit[i];
  }
  return AttackOutcome::no();
}

AttackOutcome singlecaved_control_plurality(const AttackInstance& inst) {
  require_plurality(inst);
  const Axis& axis = *inst.axis;
  const CandidateId p = inst.preferred;
  const auto& V = inst.election.votes.orders;
  const int m = inst.m();
  const CandSet C = inst.registered();
  const CandSet scope = inst.kind == AttackKind::Ccac ? C | inst.spoilers : C;
  for (const auto& v : V)
    if (!is_single_caved(v.ranking, axis, scope)) throw PreconditionError("vote is not single-caved");

  auto wins = [&](CandSet active) {
    auto s = plurality_scores(V, m, active);
    for (CandidateId c : members(active))
      if (s[c] > s[p]) return false;
    return true;
  };
  if (inst.kind == AttackKind::Ccac) return wins(C) ? AttackOutcome::accept({}) : AttackOutcome::no();

  std::vector<CandidateId> left, right;  // farthest from p first
  for (int i = 0; i < axis.pos(p); ++i)
    if (contains(C, axis.at(i))) left.push_back(axis.at(i));
  for (int i = axis.size() - 1; i > axis.pos(p); --i)
    if (contains(C, axis.at(i))) right.push_back(axis.at(i));

  // p must end up at an axis end: drop one whole side and a far block of
  // the other.
  std::vector<CandSet> family{0};
  auto block = [](const std::vector<CandidateId>& side, std::size_t j) {
    CandSet s = 0;
    for (std::size_t i = 0; i < j; ++i) s |= bit(side[i]);
    return s;
  };
  const CandSet all_left = block(left, left.size()), all_right = block(right, right.size());
  for (std::size_t j = 0; j <= right.size(); ++j) family.push_back(all_left | block(right, j));
  for (std::size_t j = 0; j <= left.size(); ++j) family.push_back(all_right | block(left, j));
  std::stable_sort(family.begin(), family.end(), [](CandSet a, CandSet b) { return set_size(a) < set_size(b); });

  const CandSet F = inst.protected_set | bit(p);
  for (CandSet D : family) {
    if ((D & F) || set_size(D) > inst.budget) continue;
    if (!wins(C & ~D)) continue;
    Witness w;
    w.deleted_candidates = members(D);
    return AttackOutcome::accept(std::move(w));
  }
  return AttackOutcome::no();
}

}  // namespace nearsp
