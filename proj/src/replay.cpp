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

#include "nearsp/replay.hpp"

#include <algorithm>
#include <set>

#include "nearsp/structure.hpp"

namespace nearsp {
namespace {

bool variant_allows(BriberyVariant var, CandSet before, CandSet after, CandidateId p) {
  switch (var) {
    case BriberyVariant::Plain: return true;
    case BriberyVariant::Negative: return contains(before, p) || !contains(after, p);
    case BriberyVariant::StrongNegative: return !contains(after, p);
  }
  return false;
}

template <class T>
bool distinct(const std::vector<T>& v) {
  return std::set<T>(v.begin(), v.end()).size() == v.size();
}

bool is_permutation_of(const std::vector<CandidateId>& r, int m) {
  if (static_cast<int>(r.size()) != m) return false;
  CandSet s = 0;
  for (CandidateId c : r) {
    if (c < 0 || c >= m) return false;
    s |= bit(c);
  }
  return s == full_set(m);
}

bool approval_winner(std::span<const ApprovalVote> V, int m, CandidateId p) {
  auto s = approval_scores(V, m);
  return *std::max_element(s.begin(), s.end()) == s[p];
}

}  // namespace

int bribery_bound(const Society& s) {
  if (s.kind == SocietyKind::Maverick) return s.k;
  if (s.kind == SocietyKind::SinglePeaked) return 0;
  return -1;
}

std::vector<std::string> replay_witness(const AttackInstance& inst, const AttackOutcome& out) {
  std::vector<std::string> bad;
  if (!out.yes) return bad;
  if (!out.witness) return {"yes outcome without a witness"};
  const Witness& w = *out.witness;
  const int m = inst.m();
  const CandidateId p = inst.preferred;
  const std::int64_t K = inst.budget;
  auto over_budget = [&](std::size_t n) {
    if (static_cast<std::int64_t>(n) > K) bad.push_back("uses " + std::to_string(n) + " > budget " + std::to_string(K));
  };

  switch (inst.kind) {
    case AttackKind::Ccwm: {
      if (w.manipulator_votes.size() != inst.manipulators.size()) {
        bad.push_back("wrong number of manipulator votes");
        return bad;
      }
      Profile prof = inst.election.votes;
      for (std::size_t i = 0; i < w.manipulator_votes.size(); ++i) {
        if (!is_permutation_of(w.manipulator_votes[i], m)) {
          bad.push_back("manipulator vote " + std::to_string(i) + " is not a full ranking");
          return bad;
        }
        prof.orders.push_back({w.manipulator_votes[i], inst.manipulators[i], std::nullopt});
      }
      if (inst.axis && inst.society.kind != SocietyKind::None) {
        if (inst.society.kind == SocietyKind::Maverick) {
          if (count_mavericks(prof, *inst.axis) > inst.society.k) bad.push_back("maverick bound exceeded");
        } else {
          for (std::size_t i = 0; i < w.manipulator_votes.size(); ++i)
            if (!society_admits(w.manipulator_votes[i], *inst.axis, inst.society))
              bad.push_back("manipulator vote " + std::to_string(i) + " violates the society");
        }
      }
      if (!is_winner(prof, inst.system, m, full_set(m), p)) bad.push_back("p does not win");
      break;
    }
    case AttackKind::Ccav: {
      over_budget(w.added_voters.size());
      if (!distinct(w.added_voters)) bad.push_back("repeated pool voter");
      Profile prof = inst.election.votes;
      for (int i : w.added_voters) {
        if (i < 0 || i >= static_cast<int>(inst.pool.size())) {
          bad.push_back("pool index out of range");
          return bad;
        }
        if (prof.kind == BallotKind::Orders) prof.orders.push_back(inst.pool.orders[i]);
        else prof.approvals.push_back(inst.pool.approvals[i]);
      }
      if (!is_winner(prof, inst.system, m, full_set(m), p)) bad.push_back("p does not win");
      break;
    }
    case AttackKind::Ccdv: {
      over_budget(w.deleted_voters.size());
      if (!distinct(w.deleted_voters)) bad.push_back("repeated voter");
      const int n = static_cast<int>(inst.election.votes.size());
      std::vector<bool> gone(n, false);
      for (int i : w.deleted_voters) {
        if (i < 0 || i >= n) {
          bad.push_back("voter index out of range");
          return bad;
        }
        gone[i] = true;
        bool del = inst.election.votes.kind == BallotKind::Orders ? is_deletable(inst.election.votes.orders[i])
                                                                   : is_deletable(inst.election.votes.approvals[i]);
        if (!del) bad.push_back("voter " + std::to_string(i) + " is not deletable");
      }
      Profile prof;
      prof.kind = inst.election.votes.kind;
      for (int i = 0; i < n; ++i) {
        if (gone[i]) continue;
        if (prof.kind == BallotKind::Orders) prof.orders.push_back(inst.election.votes.orders[i]);
        else prof.approvals.push_back(inst.election.votes.approvals[i]);
      }
      if (!is_winner(prof, inst.system, m, full_set(m), p)) bad.push_back("p does not win");
      break;
    }
    case AttackKind::Ccac: {
      over_budget(w.added_candidates.size());
      if (!distinct(w.added_candidates)) bad.push_back("repeated candidate");
      CandSet active = inst.registered();
      for (CandidateId c : w.added_candidates) {
        if (c < 0 || c >= m || !contains(inst.spoilers, c)) {
          bad.push_back("added candidate is not a spoiler");
          return bad;
        }
        active |= bit(c);
      }
      if (!is_winner(inst.election.votes, inst.system, m, active, p)) bad.push_back("p does not win");
      break;
    }
    case AttackKind::Ccdc: {
      over_budget(w.deleted_candidates.size());
      if (!distinct(w.deleted_candidates)) bad.push_back("repeated candidate");
      CandSet active = inst.registered();
      for (CandidateId c : w.deleted_candidates) {
        if (c < 0 || c >= m || !contains(active, c)) {
          bad.push_back("deleted candidate is not registered");
          return bad;
        }
        if (c == p || contains(inst.protected_set, c)) bad.push_back("deleted a protected candidate");
        active &= ~bit(c);
      }
      if (!is_winner(inst.election.votes, inst.system, m, active, p)) bad.push_back("p does not win");
      break;
    }
    case AttackKind::Bribery: {
      over_budget(w.bribes.size());
      const auto& V = inst.election.votes.approvals;
      std::vector<ApprovalVote> after(V.begin(), V.end());
      std::vector<int> who;
      const int bound = bribery_bound(inst.society);
      const bool marked = inst.bribery_model == BriberyModel::Marked;
      for (const auto& [i, s] : w.bribes) {
        if (i < 0 || i >= static_cast<int>(V.size()) || (s & ~full_set(m))) {
          bad.push_back("bribe out of range");
          return bad;
        }
        who.push_back(i);
        if (!variant_allows(inst.bribery_variant, V[i].approved, s, p))
          bad.push_back("bribe of voter " + std::to_string(i) + " breaks the variant");
        if (bound >= 0 && inst.axis && marked && !is_maverick_enabled(V[i]) && !is_interval(s, *inst.axis))
          bad.push_back("voter " + std::to_string(i) + " is not maverick-enabled but bribed off the axis");
        after[i].approved = s;
      }
      if (!distinct(who)) bad.push_back("voter bribed twice");
      if (bound >= 0 && inst.axis && !marked) {
        int mav = 0;
        for (const auto& v : after) mav += is_maverick(v, *inst.axis);
        if (mav > bound) bad.push_back("maverick bound exceeded after bribery");
      }
      if (!approval_winner(after, m, p)) bad.push_back("p does not win");
      break;
    }
  }
  return bad;
}

std::vector<std::string> replay_flagbribe(int m, std::span<const ApprovalVote> V, CandidateId p, std::int64_t K,
                                          const Axis& axis, BriberyVariant variant, const AttackOutcome& out) {
  std::vector<std::string> bad;
  if (!out.yes) return bad;
  if (!out.witness) return {"yes outcome without a witness"};
  std::vector<ApprovalVote> after(V.begin(), V.end());
  std::vector<int> who;
  if (static_cast<std::int64_t>(out.witness->bribes.size()) > K) bad.push_back("budget exceeded");
  for (const auto& [i, s] : out.witness->bribes) {
    if (i < 0 || i >= static_cast<int>(V.size())) {
      bad.push_back("bribe out of range");
      return bad;
    }
    who.push_back(i);
    if (!is_open_to_bribe(V[i])) bad.push_back("voter " + std::to_string(i) + " is not open to bribes");
    if (!is_interval(s, axis)) bad.push_back("bribe target is not an interval");
    if (!variant_allows(variant, V[i].approved, s, p)) bad.push_back("bribe breaks the variant");
    after[i].approved = s;
  }
  if (!distinct(who)) bad.push_back("voter bribed twice");
  if (!approval_winner(after, m, p)) bad.push_back("p does not win");
  return bad;
}

}  // namespace nearsp
