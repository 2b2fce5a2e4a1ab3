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

#include "nearsp/model.hpp"

#include <algorithm>

#include "nearsp/error.hpp"

namespace nearsp {

std::vector<CandidateId> members(CandSet s) {
  std::vector<CandidateId> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

CandSet to_set(std::span<const CandidateId> ids) {
  CandSet s = 0;
  for (CandidateId c : ids) s |= bit(c);
  return s;
}

Axis::Axis(std::vector<CandidateId> order) : order_(std::move(order)) {
  const int m = size();
  pos_.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    CandidateId c = order_[i];
    if (c < 0 || c >= m || pos_[c] != -1) throw PreconditionError("axis is not a permutation of the candidates");
    pos_[c] = i;
  }
}

std::vector<std::int64_t> VotingSystem::score_vector(int m) const {
  std::vector<std::int64_t> v(m, 0);
  switch (kind) {
    case SystemKind::Plurality:
      if (m > 0) v[0] = 1;
      break;
    case SystemKind::Veto:
      std::fill(v.begin(), v.end(), 1);
      if (m > 0) v[m - 1] = 0;
      break;
    case SystemKind::Borda:
      for (int i = 0; i < m; ++i) v[i] = m - 1 - i;
      break;
    case SystemKind::Scoring:
      if (static_cast<int>(alphas.size()) != m)
        throw PreconditionError("scoring vector length " + std::to_string(alphas.size()) +
                                " does not match " + std::to_string(m) + " candidates");
      for (int i = 0; i < m; ++i) {
        if (alphas[i] < 0 || (i > 0 && alphas[i] > alphas[i - 1]))
          throw PreconditionError("scoring vector must be nonincreasing and nonnegative");
      }
      v = alphas;
      break;
    default:
      throw PreconditionError("not a positional system");
  }
  return v;
}

CandidateId top_among(std::span<const CandidateId> ranking, CandSet active) {
  for (CandidateId c : ranking)
    if (contains(active, c)) return c;
  return -1;
}

std::vector<std::int64_t> plurality_scores(std::span<const LinearVote> votes, int m, CandSet active) {
  std::vector<std::int64_t> s(m, 0);
  for (const auto& v : votes) {
    CandidateId t = top_among(v.ranking, active);
    if (t >= 0) s[t] += v.weight;
  }
  return s;
}

std::vector<std::int64_t> approval_scores(std::span<const ApprovalVote> votes, int m) {
  std::vector<std::int64_t> s(m, 0);
  for (const auto& v : votes)
    for (CandidateId c : members(v.approved & full_set(m))) s[c] += v.weight;
  return s;
}

std::vector<std::int64_t> pairwise_counts(std::span<const LinearVote> votes, int m) {
  std::vector<std::int64_t> n(static_cast<std::size_t>(m) * m, 0);
  for (const auto& v : votes) {
    for (std::size_t i = 0; i < v.ranking.size(); ++i)
      for (std::size_t j = i + 1; j < v.ranking.size(); ++j) n[v.ranking[i] * m + v.ranking[j]] += v.weight;
  }
  return n;
}

std::optional<CandidateId> condorcet_winner(std::span<const LinearVote> votes, int m, CandSet active) {
  auto n = pairwise_counts(votes, m);
  for (CandidateId a : members(active)) {
    bool beats_all = true;
    for (CandidateId b : members(active)) {
      if (a != b && n[a * m + b] <= n[b * m + a]) {
        beats_all = false;
        break;
      }
    }
    if (beats_all) return a;
  }
  return std::nullopt;
}

namespace {

CandSet argmax_set(const std::vector<std::int64_t>& score, CandSet active) {
  std::int64_t best = 0;
  bool any = false;
  for (CandidateId c : members(active))
    if (!any || score[c] > best) best = score[c], any = true;
  CandSet out = 0;
  for (CandidateId c : members(active))
    if (score[c] == best) out |= bit(c);
  return out;
}

void check_kind(const Profile& votes, const VotingSystem& sys) {
  bool approval_sys = sys.kind == SystemKind::Approval;
  bool approval_ballots = votes.kind == BallotKind::Approval;
  if (approval_sys != approval_ballots) throw PreconditionError("voting system does not match ballot kind");
}

}  // namespace

CandSet winners_among(const Profile& votes, const VotingSystem& sys, int m, CandSet active) {
  active &= full_set(m);
  if (active == 0) throw PreconditionError("empty candidate set");
  check_kind(votes, sys);
  switch (sys.kind) {
    case SystemKind::Approval: {
      std::vector<std::int64_t> s(m, 0);
      for (const auto& v : votes.approvals)
        for (CandidateId c : members(v.approved & active)) s[c] += v.weight;
      return argmax_set(s, active);
    }
    case SystemKind::Condorcet: {
      auto w = condorcet_winner(votes.orders, m, active);
      return w ? bit(*w) : 0;
    }
    case SystemKind::Plurality:
      return argmax_set(plurality_scores(votes.orders, m, active), active);
    default: {
      auto alpha = sys.score_vector(set_size(active));
      std::vector<std::int64_t> s(m, 0);
      for (const auto& v : votes.orders) {
        int place = 0;
        for (CandidateId c : v.ranking)
          if (contains(active, c)) s[c] += v.weight * alpha[place++];
      }
      return argmax_set(s, active);
    }
  }
}

bool is_winner(const Profile& votes, const VotingSystem& sys, int m, CandSet active, CandidateId p) {
  return contains(winners_among(votes, sys, m, active), p);
}

std::vector<CandidateId> evaluate_winners(const Election& e, const VotingSystem& sys) {
  return members(winners_among(e.votes, sys, e.m(), full_set(e.m())));
}

CandidateId find_candidate(const Election& e, const std::string& name) {
  auto it = std::find(e.candidates.begin(), e.candidates.end(), name);
  return it == e.candidates.end() ? -1 : static_cast<CandidateId>(it - e.candidates.begin());
}

std::string to_string(SystemKind k) {
  switch (k) {
    case SystemKind::Plurality: return "plurality";
    case SystemKind::Veto: return "veto";
    case SystemKind::Borda: return "borda";
    case SystemKind::Approval: return "approval";
    case SystemKind::Condorcet: return "condorcet";
    case SystemKind::Scoring: return "scoring";
  }
  return "?";
}

std::string to_string(SocietyKind k) {
  switch (k) {
    case SocietyKind::None: return "none";
    case SocietyKind::SinglePeaked: return "sp";
    case SocietyKind::SingleCaved: return "single-caved";
    case SocietyKind::Maverick: return "maverick";
    case SocietyKind::Swoon: return "swoon";
    case SocietyKind::Dodgson: return "dodgson";
    case SocietyKind::PerceptionFlip: return "perceptionflip";
  }
  return "?";
}

std::string to_string(AttackKind k) {
  switch (k) {
    case AttackKind::Ccwm: return "ccwm";
    case AttackKind::Ccav: return "ccav";
    case AttackKind::Ccdv: return "ccdv";
    case AttackKind::Ccac: return "ccac";
    case AttackKind::Ccdc: return "ccdc";
    case AttackKind::Bribery: return "bribery";
  }
  return "?";
}

std::string to_string(BriberyModel k) { return k == BriberyModel::Standard ? "standard" : "marked"; }

std::string to_string(BriberyVariant k) {
  switch (k) {
    case BriberyVariant::Plain: return "plain";
    case BriberyVariant::Negative: return "negative";
    case BriberyVariant::StrongNegative: return "strongnegative";
  }
  return "?";
}

}  // namespace nearsp
