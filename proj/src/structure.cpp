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

#include "nearsp/structure.hpp"

#include <algorithm>
#include <limits>

#include "nearsp/error.hpp"

namespace nearsp {

bool is_single_peaked(std::span<const CandidateId> ranking, const Axis& axis, CandSet active) {
  // Every prefix of the ranking must be an interval of the restricted axis.
  const int m = axis.size();
  std::vector<int> rpos(m, -1);
  int n = 0;
  for (int i = 0; i < m; ++i)
    if (contains(active, axis.at(i))) rpos[axis.at(i)] = n++;
  int lo = n, hi = -1, count = 0;
  for (CandidateId c : ranking) {
    if (!contains(active, c)) continue;
    lo = std::min(lo, rpos[c]);
    hi = std::max(hi, rpos[c]);
    if (hi - lo + 1 != ++count) return false;
  }
  return true;
}

bool is_single_caved(std::span<const CandidateId> ranking, const Axis& axis, CandSet active) {
  std::vector<CandidateId> rev(ranking.rbegin(), ranking.rend());
  return is_single_peaked(rev, axis, active);
}

bool is_interval(CandSet approved, const Axis& axis) {
  int lo = axis.size(), hi = -1;
  for (CandidateId c : members(approved)) {
    lo = std::min(lo, axis.pos(c));
    hi = std::max(hi, axis.pos(c));
  }
  return approved == 0 || hi - lo + 1 == set_size(approved);
}

ConsistencyReport classify_vote(const LinearVote& v, const Axis& axis) {
  ConsistencyReport r;
  r.is_sp = is_single_peaked(v.ranking, axis);
  r.is_sc = is_single_caved(v.ranking, axis);
  return r;
}

ConsistencyReport classify_vote(const ApprovalVote& v, const Axis& axis) {
  ConsistencyReport r;
  r.is_approval_interval = is_interval(v.approved, axis);
  return r;
}

ConsistencyReport full_report(const LinearVote& v, const Axis& axis, int kmax) {
  ConsistencyReport r = classify_vote(v, axis);
  r.dodgson_distance = dodgson_distance(v.ranking, axis);
  r.perception_flip_distance = perception_flip_distance(v.ranking, axis, kmax);
  r.perception_exceeds = !r.perception_flip_distance;
  return r;
}

bool is_maverick(const LinearVote& v, const Axis& axis) { return !is_single_peaked(v.ranking, axis); }
bool is_maverick(const ApprovalVote& v, const Axis& axis) { return !is_interval(v.approved, axis); }

int count_mavericks(const Profile& votes, const Axis& axis) {
  int n = 0;
  for (const auto& v : votes.orders) n += is_maverick(v, axis);
  for (const auto& v : votes.approvals) n += is_maverick(v, axis);
  return n;
}

int count_mavericks(const Election& e, const Axis& axis) { return count_mavericks(e.votes, axis); }

bool swoon_check(std::span<const CandidateId> ranking, const Axis& axis, int k, int k2) {
  const int m = static_cast<int>(ranking.size());
  if (k < 0 || k2 < 0 || k + k2 >= m) throw PreconditionError("swoon check needs k + k' < m");
  CandSet keep = 0;
  for (int i = k; i < m - k2; ++i) keep |= bit(ranking[i]);
  return is_single_peaked(ranking, axis, keep);
}

int dodgson_distance(std::span<const CandidateId> ranking, const Axis& axis) {
  // dp[l][r]: least discordance for ordering axis interval [l..r], which sits
  // above everything already peeled off the bottom.
  const int m = axis.size();
  std::vector<int> vpos(m);
  for (int i = 0; i < m; ++i) vpos[ranking[i]] = i;
  auto last_cost = [&](int x, int l, int r) {
    int c = 0;
    for (int i = l; i <= r; ++i)
      if (i != x && vpos[axis.at(x)] < vpos[axis.at(i)]) ++c;
    return c;
  };
  std::vector<std::vector<int>> dp(m, std::vector<int>(m, 0));
  for (int len = 2; len <= m; ++len) {
    for (int l = 0; l + len - 1 < m; ++l) {
      int r = l + len - 1;
      dp[l][r] = std::min(last_cost(l, l, r) + dp[l + 1][r], last_cost(r, l, r) + dp[l][r - 1]);
    }
  }
  return m == 0 ? 0 : dp[0][m - 1];
}

std::optional<int> perception_flip_distance(std::span<const CandidateId> ranking, const Axis& axis, int kmax) {
  // Axes making the vote single-peaked are built by laying its candidates
  // down in vote order, each at either end of the current block. Each
  // placement fixes its inversions against the earlier candidates on its
  // own, so the cheaper end can be taken independently every time.
  int total = 0;
  for (std::size_t t = 1; t < ranking.size(); ++t) {
    int left = 0, right = 0;
    for (std::size_t s = 0; s < t; ++s) (axis.pos(ranking[s]) < axis.pos(ranking[t]) ? left : right)++;
    total += std::min(left, right);
  }
  if (total > kmax) return std::nullopt;
  return total;
}

bool society_admits(std::span<const CandidateId> ranking, const Axis& axis, const Society& s) {
  switch (s.kind) {
    case SocietyKind::None:
    case SocietyKind::Maverick:
      return true;
    case SocietyKind::SinglePeaked:
      return is_single_peaked(ranking, axis);
    case SocietyKind::SingleCaved:
      return is_single_caved(ranking, axis);
    case SocietyKind::Swoon:
      return swoon_check(ranking, axis, s.k, s.k2);
    case SocietyKind::Dodgson:
      return dodgson_distance(ranking, axis) <= s.k;
    case SocietyKind::PerceptionFlip:
      return perception_flip_distance(ranking, axis, s.k).has_value();
  }
  return false;
}

std::vector<CandidateId> sp_order(const Axis& axis, CandidateId peak, bool right_first, CandSet active) {
  std::vector<CandidateId> out{peak};
  const int p = axis.pos(peak);
  auto left = [&] {
    for (int i = p - 1; i >= 0; --i)
      if (contains(active, axis.at(i))) out.push_back(axis.at(i));
  };
  auto right = [&] {
    for (int i = p + 1; i < axis.size(); ++i)
      if (contains(active, axis.at(i))) out.push_back(axis.at(i));
  };
  if (right_first) right(), left();
  else left(), right();
  return out;
}

CandSet neighborhood(const Axis& axis, CandSet within, CandidateId c, int k) {
  CandSet out = bit(c);
  const int p = axis.pos(c);
  int seen = 0;
  for (int i = p - 1; i >= 0 && seen < k; --i)
    if (contains(within, axis.at(i))) out |= bit(axis.at(i)), ++seen;
  seen = 0;
  for (int i = p + 1; i < axis.size() && seen < k; ++i)
    if (contains(within, axis.at(i))) out |= bit(axis.at(i)), ++seen;
  return out;
}

bool locality_check(CandSet registered, CandSet spoilers, std::span<const LinearVote> votes, const Axis& axis,
                    int k, LocalityMode mode) {
  if (k < 1) throw PreconditionError("locality radius must be at least 1");
  if (mode == LocalityMode::Sufficient) {
    for (const auto& v : votes) {
      if (dodgson_distance(v.ranking, axis) <= k - 1) continue;
      if (perception_flip_distance(v.ranking, axis, k - 1)) continue;
      return false;
    }
    return true;
  }
  const CandSet universe = registered | spoilers;
  if (set_size(universe) > 12) throw PreconditionError("exhaustive locality check is capped at 12 candidates");
  const int m = axis.size();
  for (CandSet sub = universe; sub; sub = (sub - 1) & universe) {
    auto full = plurality_scores(votes, m, sub);
    for (CandidateId c : members(sub)) {
      auto local = plurality_scores(votes, m, neighborhood(axis, sub, c, k));
      if (local[c] != full[c]) return false;
    }
  }
  return true;
}

}  // namespace nearsp
