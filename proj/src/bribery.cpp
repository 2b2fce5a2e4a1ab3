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

#include "nearsp/bribery.hpp"

#include <algorithm>

#include "interval_flow.hpp"
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

}  // namespace

CandSet canonical_target(BriberyVariant variant, CandSet before, CandidateId p) {
  switch (variant) {
    case BriberyVariant::Plain: return bit(p);
    case BriberyVariant::Negative: return contains(before, p) ? bit(p) : 0;
    case BriberyVariant::StrongNegative: return 0;
  }
  return 0;
}

AttackOutcome flagbribe_approval(int m, std::span<const ApprovalVote> V, CandidateId p, std::int64_t K,
                                 const Axis& axis, BriberyVariant variant) {
  std::vector<int> with_p, without_p;
  for (int i = 0; i < static_cast<int>(V.size()); ++i) {
    if (!is_open_to_bribe(V[i])) continue;
    if (!is_interval(V[i].approved, axis)) throw PreconditionError("open-to-bribe vote is not an axis interval");
    if (V[i].weight != 1) throw PreconditionError("open-to-bribe voters must have weight 1");
    (contains(V[i].approved, p) ? with_p : without_p).push_back(i);
  }
  const auto s = approval_scores(V, m);

  auto finish = [&](const std::vector<int>& bribed) {
    Witness w;
    for (int i : bribed) w.bribes.emplace_back(i, canonical_target(variant, V[i].approved, p));
    std::sort(w.bribes.begin(), w.bribes.end());
    return AttackOutcome::accept(std::move(w));
  };

  if (variant != BriberyVariant::Plain) {
    // p's score is fixed: voters without p go to the empty set, voters with
    // p (negative only) keep just p.
    std::vector<int> cand;
    for (int i : without_p)
      if (V[i].approved) cand.push_back(i);
    if (variant == BriberyVariant::Negative)
      for (int i : with_p)
        if (V[i].approved != bit(p)) cand.push_back(i);
    std::vector<CoverRow> rows(m);
    for (int i = 0; i < m; ++i) {
      CandidateId c = axis.at(i);
      rows[i] = c == p ? CoverRow{RowSense::Free, 0} : CoverRow{RowSense::AtLeast, s[c] - s[p]};
    }
    std::vector<IntervalItem> items;
    for (int i : cand) items.push_back(as_item(V[i].approved, axis, 1));
    auto sol = detail::solve_interval_cover(rows, items);
    if (!sol || sol->cost > K) return AttackOutcome::no();
    std::vector<int> bribed;
    for (int j : sol->chosen) bribed.push_back(cand[j]);
    return finish(bribed);
  }

  // Plain: every bribed voter moves to {p}. Guess t, the number of bribed
  // voters not approving p; p ends at s_p + t.
  const std::int64_t tmax = std::min<std::int64_t>(K, static_cast<std::int64_t>(without_p.size()));
  for (std::int64_t t = 0; t <= tmax; ++t) {
    const std::int64_t y = K - t;
    std::vector<int> cand;
    std::vector<IntervalItem> items;
    for (int i : without_p)
      if (V[i].approved) cand.push_back(i), items.push_back(as_item(V[i].approved, axis, 1));
    for (int i : with_p) cand.push_back(i), items.push_back(as_item(V[i].approved, axis, 0));
    std::vector<CoverRow> rows(m);
    for (int i = 0; i < m; ++i) {
      CandidateId c = axis.at(i);
      rows[i] = c == p ? CoverRow{RowSense::AtMost, y} : CoverRow{RowSense::AtLeast, s[c] - s[p] - t};
    }
    auto sol = detail::solve_interval_cover(rows, items);
    if (!sol || sol->cost > t) continue;
    std::vector<int> bribed;
    std::vector<bool> used(V.size(), false);
    for (int j : sol->chosen) bribed.push_back(cand[j]), used[cand[j]] = true;
    for (int i : without_p) {
      if (sol->cost >= t) break;
      if (used[i]) continue;
      bribed.push_back(i);
      used[i] = true;
      ++sol->cost;
    }
    return finish(bribed);
  }
  return AttackOutcome::no();
}

AttackOutcome maverick_bribery_approval(const AttackInstance& inst, int bound, const BriberyOptions& opts) {
  if (inst.kind != AttackKind::Bribery || inst.election.votes.kind != BallotKind::Approval ||
      inst.system.kind != SystemKind::Approval)
    throw PreconditionError("approval bribery needs an approval bribery instance");
  if (!inst.axis) throw PreconditionError("approval bribery needs an axis");
  const Axis& axis = *inst.axis;
  const auto& V = inst.election.votes.approvals;
  const CandidateId p = inst.preferred;
  const std::int64_t K = inst.budget;
  const bool marked = inst.bribery_model == BriberyModel::Marked;

  std::vector<int> enabled;
  for (int i = 0; i < static_cast<int>(V.size()); ++i) {
    bool mav = is_maverick(V[i], axis);
    if (marked) {
      if (is_maverick_enabled(V[i])) enabled.push_back(i);
      else if (mav) throw PreconditionError("marked model: a voter without the maverick flag is inconsistent");
    } else if (mav) {
      enabled.push_back(i);
    }
  }
  if (static_cast<int>(enabled.size()) > bound)
    throw PreconditionError(marked ? "more maverick-enabled voters than the bound" : "more mavericks than the bound");
  const int n = static_cast<int>(enabled.size());
  if (count_subsets(n, K) > opts.enum_cap) throw CapExceeded("maverick enumeration exceeds cap");

  std::vector<bool> is_enabled(V.size(), false);
  for (int i : enabled) is_enabled[i] = true;
  Witness w;
  bool found = for_each_subset(n, K, [&](const std::vector<int>& pick) {
    std::vector<ApprovalVote> cur(V.begin(), V.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      Flags f;
      if (!is_enabled[i]) f.set(Flag::OpenToBribe);
      cur[i].flags = f;
    }
    for (int j : pick) cur[enabled[j]].approved = canonical_target(inst.bribery_variant, V[enabled[j]].approved, p);
    auto sub = flagbribe_approval(inst.m(), cur, p, K - static_cast<std::int64_t>(pick.size()), axis,
                                  inst.bribery_variant);
    if (!sub.yes) return false;
    for (int j : pick) w.bribes.emplace_back(enabled[j], cur[enabled[j]].approved);
    for (const auto& b : sub.witness->bribes) w.bribes.push_back(b);
    std::sort(w.bribes.begin(), w.bribes.end());
    return true;
  });
  return found ? AttackOutcome::accept(std::move(w)) : AttackOutcome::no();
}

}  // namespace nearsp
