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

#include "nearsp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "nearsp/error.hpp"
#include "nearsp/structure.hpp"
#include "nearsp/subsets.hpp"

namespace nearsp {

std::uint64_t count_subsets(int n, std::int64_t max_size) {
  const std::uint64_t kMax = ~std::uint64_t{0};
  std::uint64_t total = 0, c = 1;
  for (std::int64_t s = 0; s <= std::min<std::int64_t>(max_size, n); ++s) {
    if (s > 0) {
      // c = C(n, s); the division is exact.
      if (c > kMax / static_cast<std::uint64_t>(n - s + 1)) return kMax;
      c = c * static_cast<std::uint64_t>(n - s + 1) / static_cast<std::uint64_t>(s);
    }
    if (total > kMax - c) return kMax;
    total += c;
  }
  return total;
}

namespace {

void check_size(const AttackInstance& inst, const OracleCaps& caps) {
  if (inst.m() > caps.max_candidates)
    throw CapExceeded("oracle cap: " + std::to_string(inst.m()) + " candidates > " + std::to_string(caps.max_candidates));
  std::size_t voters = inst.election.votes.size() + inst.pool.size();
  if (voters > static_cast<std::size_t>(caps.max_voters))
    throw CapExceeded("oracle cap: " + std::to_string(voters) + " voters > " + std::to_string(caps.max_voters));
}

void check_count(std::uint64_t count, const OracleCaps& caps) {
  if (count > caps.max_subsets)
    throw CapExceeded("oracle cap: search space " + std::to_string(count) + " > " + std::to_string(caps.max_subsets));
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > ~std::uint64_t{0} / a) return ~std::uint64_t{0};
  return a * b;
}

const Axis& need_axis(const AttackInstance& inst) {
  if (!inst.axis) throw PreconditionError("instance needs an axis");
  return *inst.axis;
}

struct BallotClass {
  std::vector<CandidateId> ranking;
  bool maverick = false;
};

}  // namespace

AttackOutcome brute_ccwm(const AttackInstance& inst, const OracleCaps& caps) {
  if (inst.kind != AttackKind::Ccwm) throw PreconditionError("brute_ccwm needs a ccwm instance");
  if (inst.election.votes.kind != BallotKind::Orders) throw PreconditionError("ccwm needs ordinal ballots");
  check_size(inst, caps);
  if (static_cast<int>(inst.manipulators.size()) > caps.max_manipulators)
    throw CapExceeded("oracle cap: too many manipulators");
  const int m = inst.m();
  const CandidateId p = inst.preferred;
  const Society& soc = inst.society;
  const bool mav = soc.kind == SocietyKind::Maverick;
  const Axis* axis = soc.kind == SocietyKind::None ? nullptr : &need_axis(inst);

  int budget_left = 0;
  if (mav) {
    budget_left = soc.k - count_mavericks(inst.election.votes, *axis);
    if (budget_left < 0) throw PreconditionError("nonmanipulators already exceed the maverick bound");
  } else if (axis) {
    for (const auto& v : inst.election.votes.orders)
      if (!society_admits(v.ranking, *axis, soc)) throw PreconditionError("nonmanipulator vote violates the society");
  }

  // Admissible ballots in lexicographic order, grouped by score pattern.
  std::vector<BallotClass> classes;
  const bool positional = inst.system.is_positional();
  std::vector<std::int64_t> alpha;
  if (positional) alpha = inst.system.score_vector(m);
  std::map<std::vector<std::int64_t>, std::size_t> by_pattern;
  std::vector<CandidateId> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (axis && !society_admits(perm, *axis, soc)) continue;
    bool is_mav = mav && !is_single_peaked(perm, *axis);
    if (!positional) {
      classes.push_back({perm, is_mav});
      continue;
    }
    std::vector<std::int64_t> pattern(m);
    for (int i = 0; i < m; ++i) pattern[perm[i]] = alpha[i];
    auto it = by_pattern.find(pattern);
    if (it == by_pattern.end()) {
      by_pattern.emplace(pattern, classes.size());
      classes.push_back({perm, is_mav});
    } else if (classes[it->second].maverick && !is_mav) {
      classes[it->second] = {perm, false};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  const int n = static_cast<int>(inst.manipulators.size());
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count = sat_mul(count, classes.size());
  check_count(count, caps);

  // Running totals: points for positional systems, pairwise counts otherwise.
  std::vector<std::int64_t> acc;
  if (positional) {
    acc.assign(m, 0);
    for (const auto& v : inst.election.votes.orders)
      for (int i = 0; i < m; ++i) acc[v.ranking[i]] += v.weight * alpha[i];
  } else {
    acc = pairwise_counts(inst.election.votes.orders, m);
  }
  auto add = [&](const std::vector<CandidateId>& r, std::int64_t w, int sign) {
    if (positional) {
      for (int i = 0; i < m; ++i) acc[r[i]] += sign * w * alpha[i];
    } else {
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) acc[r[i] * m + r[j]] += sign * w;
    }
  };
  auto p_wins = [&] {
    if (positional) return *std::max_element(acc.begin(), acc.end()) == acc[p];
    for (CandidateId c = 0; c < m; ++c)
      if (c != p && acc[p * m + c] <= acc[c * m + p]) return false;
    return true;
  };

  std::vector<std::size_t> choice(n);
  std::function<bool(int, int)> dfs = [&](int i, int left) {
    if (i == n) return p_wins();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      int cost = classes[c].maverick ? 1 : 0;
      if (cost > left) continue;
      choice[i] = c;
      add(classes[c].ranking, inst.manipulators[i], 1);
      bool ok = dfs(i + 1, left - cost);
      add(classes[c].ranking, inst.manipulators[i], -1);
      if (ok) return true;
    }
    return false;
  };
  if (!dfs(0, budget_left)) return AttackOutcome::no();
  Witness w;
  for (int i = 0; i < n; ++i) w.manipulator_votes.push_back(classes[choice[i]].ranking);
  return AttackOutcome::accept(std::move(w));
}

AttackOutcome brute_control(const AttackInstance& inst, const OracleCaps& caps) {
  check_size(inst, caps);
  const int m = inst.m();
  const CandidateId p = inst.preferred;
  const std::int64_t K = inst.budget;
  const Profile& V = inst.election.votes;
  Witness w;
  bool found = false;

  switch (inst.kind) {
    case AttackKind::Ccav: {
      const int n = static_cast<int>(inst.pool.size());
      check_count(count_subsets(n, K), caps);
      found = for_each_subset(n, K, [&](const std::vector<int>& pick) {
        Profile prof = V;
        for (int i : pick) {
          if (prof.kind == BallotKind::Orders) prof.orders.push_back(inst.pool.orders[i]);
          else prof.approvals.push_back(inst.pool.approvals[i]);
        }
        if (!is_winner(prof, inst.system, m, full_set(m), p)) return false;
        w.added_voters = pick;
        return true;
      });
      break;
    }
    case AttackKind::Ccdv: {
      std::vector<int> deletable;
      for (int i = 0; i < static_cast<int>(V.size()); ++i) {
        bool d = V.kind == BallotKind::Orders ? is_deletable(V.orders[i]) : is_deletable(V.approvals[i]);
        if (d) deletable.push_back(i);
      }
      const int n = static_cast<int>(deletable.size());
      check_count(count_subsets(n, K), caps);
      found = for_each_subset(n, K, [&](const std::vector<int>& pick) {
        std::vector<bool> gone(V.size(), false);
        for (int i : pick) gone[deletable[i]] = true;
        Profile prof;
        prof.kind = V.kind;
        for (std::size_t i = 0; i < V.size(); ++i) {
          if (gone[i]) continue;
          if (V.kind == BallotKind::Orders) prof.orders.push_back(V.orders[i]);
          else prof.approvals.push_back(V.approvals[i]);
        }
        if (!is_winner(prof, inst.system, m, full_set(m), p)) return false;
        for (int i : pick) w.deleted_voters.push_back(deletable[i]);
        return true;
      });
      break;
    }
    case AttackKind::Ccac: {
      auto spoilers = members(inst.spoilers);
      const int n = static_cast<int>(spoilers.size());
      check_count(count_subsets(n, K), caps);
      found = for_each_subset(n, K, [&](const std::vector<int>& pick) {
        CandSet active = inst.registered();
        for (int i : pick) active |= bit(spoilers[i]);
        if (!is_winner(V, inst.system, m, active, p)) return false;
        for (int i : pick) w.added_candidates.push_back(spoilers[i]);
        return true;
      });
      break;
    }
    case AttackKind::Ccdc: {
      auto removable = members(inst.registered() & ~inst.protected_set & ~bit(p));
      const int n = static_cast<int>(removable.size());
      check_count(count_subsets(n, K), caps);
      found = for_each_subset(n, K, [&](const std::vector<int>& pick) {
        CandSet active = inst.registered();
        for (int i : pick) active &= ~bit(removable[i]);
        if (!is_winner(V, inst.system, m, active, p)) return false;
        for (int i : pick) w.deleted_candidates.push_back(removable[i]);
        return true;
      });
      break;
    }
    default:
      throw PreconditionError("brute_control needs a control instance");
  }
  return found ? AttackOutcome::accept(std::move(w)) : AttackOutcome::no();
}

namespace {

bool variant_allows(BriberyVariant var, CandSet before, CandSet after, CandidateId p) {
  switch (var) {
    case BriberyVariant::Plain: return true;
    case BriberyVariant::Negative: return contains(before, p) || !contains(after, p);
    case BriberyVariant::StrongNegative: return !contains(after, p);
  }
  return false;
}

// legal[i] lists the sets voter i may be bribed to; empty means not bribable.
AttackOutcome bribery_search(int m, const std::vector<ApprovalVote>& votes, CandidateId p, std::int64_t K,
                             const std::vector<std::vector<CandSet>>& legal,
                             const std::function<bool(const std::vector<CandSet>&)>& post_ok,
                             const OracleCaps& caps) {
  std::vector<int> bribable;
  for (int i = 0; i < static_cast<int>(votes.size()); ++i)
    if (!legal[i].empty()) bribable.push_back(i);
  // f[j]: number of (size-j subset, assignment) pairs.
  std::vector<std::uint64_t> f(1, 1);
  for (int i : bribable) {
    f.push_back(0);
    for (std::size_t j = f.size() - 1; j > 0; --j) {
      std::uint64_t add = sat_mul(f[j - 1], legal[i].size());
      f[j] = f[j] > ~std::uint64_t{0} - add ? ~std::uint64_t{0} : f[j] + add;
    }
  }
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < f.size() && static_cast<std::int64_t>(j) <= K; ++j)
    total = total > ~std::uint64_t{0} - f[j] ? ~std::uint64_t{0} : total + f[j];
  check_count(total, caps);

  std::vector<CandSet> sets(votes.size());
  for (std::size_t i = 0; i < votes.size(); ++i) sets[i] = votes[i].approved;
  auto p_wins = [&] {
    std::vector<std::int64_t> s(m, 0);
    for (std::size_t i = 0; i < votes.size(); ++i)
      for (CandidateId c : members(sets[i])) s[c] += votes[i].weight;
    return *std::max_element(s.begin(), s.end()) == s[p];
  };
  Witness w;
  bool found = for_each_subset(static_cast<int>(bribable.size()), K, [&](const std::vector<int>& pick) {
    std::function<bool(std::size_t)> assign = [&](std::size_t j) {
      if (j == pick.size()) return post_ok(sets) && p_wins();
      int v = bribable[pick[j]];
      for (CandSet s : legal[v]) {
        sets[v] = s;
        if (assign(j + 1)) return true;
      }
      sets[v] = votes[v].approved;
      return false;
    };
    if (!assign(0)) return false;
    for (int i : pick) w.bribes.emplace_back(bribable[i], sets[bribable[i]]);
    return true;
  });
  return found ? AttackOutcome::accept(std::move(w)) : AttackOutcome::no();
}

}  // namespace

AttackOutcome brute_bribery(const AttackInstance& inst, const OracleCaps& caps) {
  if (inst.kind != AttackKind::Bribery) throw PreconditionError("brute_bribery needs a bribery instance");
  if (inst.election.votes.kind != BallotKind::Approval) throw PreconditionError("bribery needs approval ballots");
  check_size(inst, caps);
  const int m = inst.m();
  const auto& votes = inst.election.votes.approvals;
  const CandidateId p = inst.preferred;
  int bound = -1;
  if (inst.society.kind == SocietyKind::Maverick) bound = inst.society.k;
  else if (inst.society.kind == SocietyKind::SinglePeaked) bound = 0;
  else if (inst.society.kind != SocietyKind::None) throw PreconditionError("bribery supports none, sp or maverick societies");
  const Axis* axis = bound >= 0 ? &need_axis(inst) : nullptr;
  const bool marked = inst.bribery_model == BriberyModel::Marked;
  if (m > 16) throw CapExceeded("oracle cap: bribery enumerates all approval sets, needs m <= 16");

  if (axis) {
    if (marked) {
      int enabled = 0;
      for (const auto& v : votes) {
        enabled += is_maverick_enabled(v);
        if (!is_maverick_enabled(v) && is_maverick(v, *axis))
          throw PreconditionError("marked model: a voter without the maverick flag is inconsistent");
      }
      if (enabled > bound) throw PreconditionError("marked model: more maverick-enabled voters than the bound");
    } else if (count_mavericks(inst.election.votes, *axis) > bound) {
      throw PreconditionError("more mavericks than the bound");
    }
  }

  std::vector<std::vector<CandSet>> legal(votes.size());
  for (std::size_t i = 0; i < votes.size(); ++i) {
    for (CandSet s = 0; s <= full_set(m); ++s) {
      if (!variant_allows(inst.bribery_variant, votes[i].approved, s, p)) continue;
      if (axis && marked && !is_maverick_enabled(votes[i]) && !is_interval(s, *axis)) continue;
      legal[i].push_back(s);
    }
  }
  auto post_ok = [&](const std::vector<CandSet>& sets) {
    if (!axis || marked) return true;
    int mav = 0;
    for (CandSet s : sets) mav += !is_interval(s, *axis);
    return mav <= bound;
  };
  return bribery_search(m, votes, p, inst.budget, legal, post_ok, caps);
}

AttackOutcome brute_flagbribe(int m, const std::vector<ApprovalVote>& votes, CandidateId p, std::int64_t budget,
                              const Axis& axis, BriberyVariant variant, const OracleCaps& caps) {
  if (m > caps.max_candidates || static_cast<int>(votes.size()) > caps.max_voters)
    throw CapExceeded("oracle cap exceeded");
  if (m > 16) throw CapExceeded("oracle cap: bribery enumerates all approval sets, needs m <= 16");
  std::vector<std::vector<CandSet>> legal(votes.size());
  for (std::size_t i = 0; i < votes.size(); ++i) {
    if (!is_open_to_bribe(votes[i])) continue;
    for (CandSet s = 0; s <= full_set(m); ++s)
      if (is_interval(s, axis) && variant_allows(variant, votes[i].approved, s, p)) legal[i].push_back(s);
  }
  return bribery_search(m, votes, p, budget, legal, [](const std::vector<CandSet>&) { return true; }, caps);
}

AttackOutcome brute_solve(const AttackInstance& inst, const OracleCaps& caps) {
  switch (inst.kind) {
    case AttackKind::Ccwm: return brute_ccwm(inst, caps);
    case AttackKind::Bribery: return brute_bribery(inst, caps);
    default: return brute_control(inst, caps);
  }
}

}  // namespace nearsp
