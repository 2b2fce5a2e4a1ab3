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

#include "interval_flow.hpp"
#include "nearsp/control.hpp"
#include "nearsp/error.hpp"
#include "nearsp/structure.hpp"
#include "nearsp/subsets.hpp"

namespace nearsp {

using detail::CoverRow;
using detail::IntervalItem;
using detail::RowSense;

namespace {

IntervalItem as_item(CandSet s, const Axis& axis, std::int64_t cost) {
  int lo = axis.size(), hi = -1;
  for (CandidateId c : members(s)) {
    lo = std::min(lo, axis.pos(c));
    hi = std::max(hi, axis.pos(c));
  }
  return {lo, hi, cost};
}

void require_approval(const AttackInstance& inst) {
  if (inst.election.votes.kind != BallotKind::Approval || inst.system.kind != SystemKind::Approval)
    throw PreconditionError("approval control needs approval ballots and approval voting");
  if (!inst.axis) throw PreconditionError("approval control needs an axis");
}

}  // namespace

std::vector<ApprovalVote> demaverickify_approval(std::span<const ApprovalVote> votes, const Axis& axis) {
  std::vector<ApprovalVote> out;
  for (const auto& v : votes) {
    if (!is_maverick(v, axis)) {
      out.push_back(v);
      continue;
    }
    for (CandidateId c : members(v.approved)) out.push_back({bit(c), v.weight, v.flags});
  }
  return out;
}

AttackOutcome sp_approval_ccav(int m, std::span<const ApprovalVote> V, std::span<const ApprovalVote> W,
                               CandidateId p, std::int64_t K, const Axis& axis) {
  std::vector<int> with_p;
  for (int i = 0; i < static_cast<int>(W.size()); ++i) {
    if (!is_interval(W[i].approved, axis)) throw PreconditionError("pool vote is not an axis interval");
    if (contains(W[i].approved, p)) {
      if (W[i].weight != 1) throw PreconditionError("pool voters approving p must have weight 1");
      with_p.push_back(i);
    }
  }
  auto s = approval_scores(V, m);
  const std::int64_t x = std::min<std::int64_t>(K, static_cast<std::int64_t>(with_p.size()));
  std::vector<CoverRow> rows(m);
  for (int i = 0; i < m; ++i) {
    CandidateId c = axis.at(i);
    rows[i] = c == p ? CoverRow{RowSense::Exactly, x} : CoverRow{RowSense::AtMost, s[p] + x - s[c]};
  }
  std::vector<IntervalItem> items;
  for (int i : with_p) items.push_back(as_item(W[i].approved, axis, 0));
  auto sol = detail::solve_interval_cover(rows, items);
  if (!sol) return AttackOutcome::no();
  Witness w;
  for (int j : sol->chosen) w.added_voters.push_back(with_p[j]);
  return AttackOutcome::accept(std::move(w));
}

AttackOutcome sp_approval_ccdv_flagged(int m, std::span<const ApprovalVote> V, CandidateId p, std::int64_t K,
                                       const Axis& axis) {
  std::vector<int> useful;
  for (int i = 0; i < static_cast<int>(V.size()); ++i) {
    if (!is_deletable(V[i])) continue;
    if (!is_interval(V[i].approved, axis)) throw PreconditionError("deletable vote is not an axis interval");
    if (contains(V[i].approved, p) || V[i].approved == 0) continue;
    if (V[i].weight != 1) throw PreconditionError("deletable voters must have weight 1");
    useful.push_back(i);
  }
  auto s = approval_scores(V, m);
  std::vector<CoverRow> rows(m);
  for (int i = 0; i < m; ++i) {
    CandidateId c = axis.at(i);
    rows[i] = c == p ? CoverRow{RowSense::Free, 0} : CoverRow{RowSense::AtLeast, s[c] - s[p]};
  }
  std::vector<IntervalItem> items;
  for (int i : useful) items.push_back(as_item(V[i].approved, axis, 1));
  auto sol = detail::solve_interval_cover(rows, items);
  if (!sol || sol->cost > K) return AttackOutcome::no();
  Witness w;
  for (int j : sol->chosen) w.deleted_voters.push_back(useful[j]);
  return AttackOutcome::accept(std::move(w));
}

AttackOutcome maverick_control_approval(const AttackInstance& inst, int maverick_bound, bool count_pool_only,
                                        const ControlOptions& opts) {
  require_approval(inst);
  const Axis& axis = *inst.axis;
  const int m = inst.m();
  const CandidateId p = inst.preferred;
  const auto& V = inst.election.votes.approvals;
  const std::int64_t K = inst.budget;

  if (inst.kind == AttackKind::Ccav) {
    const auto& W = inst.pool.approvals;
    std::vector<int> mav, plain;
    for (int i = 0; i < static_cast<int>(W.size()); ++i) (is_maverick(W[i], axis) ? mav : plain).push_back(i);
    int counted = static_cast<int>(mav.size());
    if (!count_pool_only) counted += count_mavericks(inst.election.votes, axis);
    if (counted > maverick_bound) throw PreconditionError("more mavericks than the bound");
    if (count_subsets(static_cast<int>(mav.size()), K) > opts.enum_cap) throw CapExceeded("maverick enumeration exceeds cap");
    std::vector<ApprovalVote> pool;
    for (int i : plain) pool.push_back(W[i]);
    Witness w;
    bool found = for_each_subset(static_cast<int>(mav.size()), K, [&](const std::vector<int>& pick) {
      std::vector<ApprovalVote> main(V.begin(), V.end());
      for (int i : pick) main.push_back(W[mav[i]]);
      auto sub = sp_approval_ccav(m, demaverickify_approval(main, axis), pool, p,
                                  K - static_cast<std::int64_t>(pick.size()), axis);
      if (!sub.yes) return false;
      for (int i : pick) w.added_voters.push_back(mav[i]);
      for (int j : sub.witness->added_voters) w.added_voters.push_back(plain[j]);
      std::sort(w.added_voters.begin(), w.added_voters.end());
      return true;
    });
    return found ? AttackOutcome::accept(std::move(w)) : AttackOutcome::no();
  }

  if (inst.kind != AttackKind::Ccdv) throw PreconditionError("approval control handles ccav and ccdv");
  std::vector<int> mav_deletable;
  int mavericks = 0;
  for (int i = 0; i < static_cast<int>(V.size()); ++i) {
    if (!is_maverick(V[i], axis)) continue;
    ++mavericks;
    if (is_deletable(V[i])) mav_deletable.push_back(i);
  }
  if (mavericks > maverick_bound) throw PreconditionError("more mavericks than the bound");
  if (count_subsets(static_cast<int>(mav_deletable.size()), K) > opts.enum_cap)
    throw CapExceeded("maverick enumeration exceeds cap");
  Witness w;
  bool found = for_each_subset(static_cast<int>(mav_deletable.size()), K, [&](const std::vector<int>& pick) {
    std::vector<bool> gone(V.size(), false);
    for (int i : pick) gone[mav_deletable[i]] = true;
    std::vector<ApprovalVote> rest;
    std::vector<int> index;
    for (int i = 0; i < static_cast<int>(V.size()); ++i) {
      if (gone[i]) continue;
      ApprovalVote v = V[i];
      Flags f;
      if (is_deletable(V[i]) && !is_maverick(V[i], axis)) f.set(Flag::Deletable);
      v.flags = f;
      rest.push_back(v);
      index.push_back(i);
    }
    auto sub = sp_approval_ccdv_flagged(m, rest, p, K - static_cast<std::int64_t>(pick.size()), axis);
    if (!sub.yes) return false;
    for (int i : pick) w.deleted_voters.push_back(mav_deletable[i]);
    for (int j : sub.witness->deleted_voters) w.deleted_voters.push_back(index[j]);
    std::sort(w.deleted_voters.begin(), w.deleted_voters.end());
    return true;
  });
  return found ? AttackOutcome::accept(std::move(w)) : AttackOutcome::no();
}

}  // namespace nearsp
