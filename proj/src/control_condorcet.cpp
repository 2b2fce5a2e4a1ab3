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
#include "nearsp/subsets.hpp"

namespace nearsp {
namespace {

int rank_of(const LinearVote& v, CandidateId c) {
  return static_cast<int>(std::find(v.ranking.begin(), v.ranking.end(), c) - v.ranking.begin());
}

bool p_is_condorcet(const std::vector<LinearVote>& votes, int m, CandidateId p) {
  auto w = condorcet_winner(votes, m, full_set(m));
  return w && *w == p;
}

}  // namespace

CondorcetPartition partition_condorcet(std::span<const LinearVote> votes, const Axis& axis, CandidateId p,
                                       bool ascending) {
  CondorcetPartition part;
  for (int i = 0; i < static_cast<int>(votes.size()); ++i) {
    const auto& v = votes[i];
    if (v.ranking[0] == p) part.top.push_back(i);
    else if (is_maverick(v, axis)) part.maverick.push_back(i);
    else if (axis.pos(v.ranking[0]) < axis.pos(p)) part.left.push_back(i);
    else part.right.push_back(i);
  }
  auto order = [&](std::vector<int>& list) {
    std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
      int ra = rank_of(votes[a], p), rb = rank_of(votes[b], p);
      return ascending ? ra < rb : ra > rb;
    });
  };
  order(part.left);
  order(part.right);
  return part;
}

AttackOutcome maverick_control_condorcet(const AttackInstance& inst, int maverick_bound, const ControlOptions& opts) {
  if (inst.election.votes.kind != BallotKind::Orders || inst.system.kind != SystemKind::Condorcet)
    throw PreconditionError("Condorcet control needs ordinal ballots and Condorcet voting");
  if (!inst.axis) throw PreconditionError("Condorcet control needs an axis");
  const Axis& axis = *inst.axis;
  const int m = inst.m();
  const CandidateId p = inst.preferred;
  const std::int64_t K = inst.budget;
  const auto& V = inst.election.votes.orders;

  if (inst.kind == AttackKind::Ccav) {
    const auto& W = inst.pool.orders;
    for (const auto& v : W)
      if (v.weight != 1) throw PreconditionError("pool voters must have weight 1");
    auto part = partition_condorcet(W, axis, p, true);
    if (static_cast<int>(part.maverick.size()) > maverick_bound) throw PreconditionError("more mavericks than the bound");

    std::vector<LinearVote> base(V.begin(), V.end());
    std::vector<int> added;
    const std::int64_t take = std::min<std::int64_t>(K, static_cast<std::int64_t>(part.top.size()));
    for (std::int64_t i = 0; i < take; ++i) {
      base.push_back(W[part.top[i]]);
      added.push_back(part.top[i]);
    }
    if (p_is_condorcet(base, m, p)) {
      Witness w;
      w.added_voters = added;
      std::sort(w.added_voters.begin(), w.added_voters.end());
      return AttackOutcome::accept(std::move(w));
    }
    const std::int64_t K1 = K - take;
    if (K1 == 0) return AttackOutcome::no();
    if (count_subsets(static_cast<int>(part.maverick.size()), K1) > opts.enum_cap)
      throw CapExceeded("maverick enumeration exceeds cap");

    Witness w;
    bool found = for_each_subset(static_cast<int>(part.maverick.size()), K1, [&](const std::vector<int>& pick) {
      std::vector<LinearVote> prof = base;
      for (int i : pick) prof.push_back(W[part.maverick[i]]);
      const std::int64_t K2 = K1 - static_cast<std::int64_t>(pick.size());
      const std::size_t mark = prof.size();
      for (std::int64_t kl = 0; kl <= std::min<std::int64_t>(K2, part.left.size()); ++kl) {
        for (std::int64_t kr = 0; kr <= std::min<std::int64_t>(K2 - kl, part.right.size()); ++kr) {
          prof.resize(mark);
          for (std::int64_t i = 0; i < kl; ++i) prof.push_back(W[part.left[i]]);
          for (std::int64_t i = 0; i < kr; ++i) prof.push_back(W[part.right[i]]);
          if (!p_is_condorcet(prof, m, p)) continue;
          w.added_voters = added;
          for (int i : pick) w.added_voters.push_back(part.maverick[i]);
          for (std::int64_t i = 0; i < kl; ++i) w.added_voters.push_back(part.left[i]);
          for (std::int64_t i = 0; i < kr; ++i) w.added_voters.push_back(part.right[i]);
          std::sort(w.added_voters.begin(), w.added_voters.end());
          return true;
        }
      }
      return false;
    });
    return found ? AttackOutcome::accept(std::move(w)) : AttackOutcome::no();
  }

  if (inst.kind != AttackKind::Ccdv) throw PreconditionError("Condorcet control handles ccav and ccdv");
  auto part = partition_condorcet(V, axis, p, false);
  if (static_cast<int>(part.maverick.size()) > maverick_bound) throw PreconditionError("more mavericks than the bound");
  auto keep_deletable = [&](std::vector<int>& list) {
    std::erase_if(list, [&](int i) { return !is_deletable(V[i]); });
    for (int i : list)
      if (V[i].weight != 1) throw PreconditionError("deletable voters must have weight 1");
  };
  keep_deletable(part.left);
  keep_deletable(part.right);
  keep_deletable(part.maverick);
  if (count_subsets(static_cast<int>(part.maverick.size()), K) > opts.enum_cap)
    throw CapExceeded("maverick enumeration exceeds cap");

  Witness w;
  bool found = for_each_subset(static_cast<int>(part.maverick.size()), K, [&](const std::vector<int>& pick) {
    const std::int64_t K1 = K - static_cast<std::int64_t>(pick.size());
    for (std::int64_t kl = 0; kl <= std::min<std::int64_t>(K1, part.left.size()); ++kl) {
      for (std::int64_t kr = 0; kr <= std::min<std::int64_t>(K1 - kl, part.right.size()); ++kr) {
        std::vector<bool> gone(V.size(), false);
        for (int i : pick) gone[part.maverick[i]] = true;
        for (std::int64_t i = 0; i < kl; ++i) gone[part.left[i]] = true;
        for (std::int64_t i = 0; i < kr; ++i) gone[part.right[i]] = true;
        std::vector<LinearVote> prof;
        for (std::size_t i = 0; i < V.size(); ++i)
          if (!gone[i]) prof.push_back(V[i]);
        if (!p_is_condorcet(prof, m, p)) continue;
        for (std::size_t i = 0; i < V.size(); ++i)
          if (gone[i]) w.deleted_voters.push_back(static_cast<int>(i));
        return true;
      }
    }
    return false;
  });
  return found ? AttackOutcome::accept(std::move(w)) : AttackOutcome::no();
}

}  // namespace nearsp
