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

#include "nearsp/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <thread>

#include "nearsp/bribery.hpp"
#include "nearsp/control.hpp"
#include "nearsp/error.hpp"
#include "nearsp/io.hpp"
#include "nearsp/manipulation.hpp"
#include "nearsp/oracle.hpp"
#include "nearsp/reductions.hpp"
#include "nearsp/replay.hpp"
#include "nearsp/structure.hpp"
#include "nearsp/testing.hpp"

namespace nearsp::acceptance {

using namespace nearsp::testing;

namespace {

// Outcome of one random instance.
struct Check {
  bool skipped = false;
  bool mismatch = false;
  bool error = false;
  bool yes = false;
  int replays = 0;
  int violations = 0;
  std::string detail;
};

using InstanceFn = std::function<Check(Rng&)>;

struct SuiteDef {
  int count = 0;
  double time_limit = 0;
  InstanceFn fn;
};

Rng instance_rng(std::uint64_t seed, const std::string& name, int i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(std::hash<std::string>{}(name)), static_cast<std::uint32_t>(i)};
  return Rng(seq);
}

std::string describe(const AttackInstance& inst) {
  try {
    return emit_instance(inst);
  } catch (const std::exception& e) {
    return std::string("<unprintable instance: ") + e.what() + ">";
  }
}

Check replayed(Check c, const std::vector<std::string>& bad, const std::string& what) {
  c.replays += 1;
  c.violations += static_cast<int>(bad.size());
  if (!bad.empty() && c.detail.empty()) c.detail = "replay: " + bad.front() + "\n" + what;
  return c;
}

// Solver against oracle on one instance, plus a replay of the solver's
// witness.
Check compare(const AttackInstance& inst, const std::function<AttackOutcome()>& solver,
              const std::function<AttackOutcome()>& oracle) {
  Check c;
  AttackOutcome want;
  try {
    want = oracle();
  } catch (const CapExceeded&) {
    c.skipped = true;
    return c;
  } catch (const std::exception& e) {
    c.error = true;
    c.detail = std::string("oracle: ") + e.what() + "\n" + describe(inst);
    return c;
  }
  AttackOutcome got;
  try {
    got = solver();
  } catch (const std::exception& e) {
    c.error = true;
    c.detail = std::string("solver: ") + e.what() + "\n" + describe(inst);
    return c;
  }
  c.yes = want.yes;
  if (got.yes != want.yes) {
    c.mismatch = true;
    c.detail = std::string("solver says ") + (got.yes ? "yes" : "no") + ", oracle says " + (want.yes ? "yes" : "no") +
               "\n" + describe(inst);
    return c;
  }
  if (got.yes) c = replayed(c, replay_witness(inst, got), describe(inst));
  return c;
}

Check boolean_check(bool ok, const std::string& detail) {
  Check c;
  c.yes = ok;
  if (!ok) {
    c.mismatch = true;
    c.detail = detail;
  }
  return c;
}

std::int64_t rand_weight(Rng& rng, int hi) { return uniform(rng, 1, hi); }

std::string ranking_text(const std::vector<CandidateId>& r) {
  std::string s;
  for (CandidateId c : r) s += (s.empty() ? "" : " ") + std::to_string(c);
  return s;
}

// ---- criterion 1 generators ----

enum class VetoSoc { Maverick, Swoon, Dodgson };

AttackInstance gen_veto(Rng& rng, VetoSoc soc) {
  int k = 0, m = 5;
  Society society;
  if (soc == VetoSoc::Maverick) {
    k = uniform(rng, 0, 3);
    m = uniform(rng, k + 3, 6);
    society = coin(rng, 0.2) && k == 0 ? Society::sp() : Society::maverick(k);
  } else {
    m = uniform(rng, 5, 6);
    society = soc == VetoSoc::Swoon ? Society::swoon(1, 0) : Society::dodgson(1);
  }
  auto inst = blank(AttackKind::Ccwm, m, BallotKind::Orders, VotingSystem::veto(), rng);
  inst.society = society;
  const Axis& axis = *inst.axis;
  const bool protect_p = coin(rng);
  const int n = uniform(rng, 0, 5);
  int mavericks = soc == VetoSoc::Maverick ? uniform(rng, 0, k) : 0;
  for (int i = 0; i < n; ++i) {
    std::vector<CandidateId> r;
    for (int tries = 0; tries < 200; ++tries) {
      if (soc == VetoSoc::Maverick) r = mavericks > 0 ? random_ranking(m, rng) : random_sp_ranking(axis, rng);
      else if (soc == VetoSoc::Dodgson) r = random_dodgson_ranking(axis, 1, rng);
      else {
        r = random_ranking(m, rng);
        if (!swoon_check(r, axis, 1, 0)) continue;
      }
      if (!(protect_p && r.back() == inst.preferred)) break;
    }
    if (soc == VetoSoc::Maverick && mavericks > 0) --mavericks;
    if (soc == VetoSoc::Swoon && !swoon_check(r, axis, 1, 0)) r = random_sp_ranking(axis, rng);
    inst.election.votes.orders.push_back({r, rand_weight(rng, 3), std::nullopt});
  }
  const int t = uniform(rng, 1, 3);
  for (int i = 0; i < t; ++i) inst.manipulators.push_back(rand_weight(rng, 3));
  return inst;
}

Check check_veto(Rng& rng, VetoSoc soc) {
  auto inst = gen_veto(rng, soc);
  return compare(inst, [&] { return ccwm_veto_never_vetoed(inst); }, [&] { return brute_ccwm(inst); });
}

Check check_sc_scoring(Rng& rng) {
  const std::int64_t a2 = uniform(rng, 0, 3), a1 = uniform(rng, 2 * a2 + 1, 2 * a2 + 4), off = uniform(rng, 0, 2);
  auto inst = blank(AttackKind::Ccwm, 3, BallotKind::Orders, VotingSystem::scoring({a1 + off, a2 + off, off}), rng);
  inst.society = Society::single_caved();
  const int n = uniform(rng, 0, 5);
  for (int i = 0; i < n; ++i) inst.election.votes.orders.push_back({random_sc_ranking(*inst.axis, rng), rand_weight(rng, 4), std::nullopt});
  const int t = uniform(rng, 0, 3);
  for (int i = 0; i < t; ++i) inst.manipulators.push_back(rand_weight(rng, 4));
  return compare(inst, [&] { return ccwm_singlecaved_scoring(inst); }, [&] { return brute_ccwm(inst); });
}

AttackInstance gen_approval(Rng& rng, AttackKind kind) {
  const int m = uniform(rng, 2, 6);
  auto inst = blank(kind, m, BallotKind::Approval, VotingSystem::approval(), rng);
  inst.budget = uniform(rng, 0, 3);
  return inst;
}

Check check_approval_ccav(Rng& rng) {
  auto inst = gen_approval(rng, AttackKind::Ccav);
  const Axis& axis = *inst.axis;
  const int nv = uniform(rng, 0, 4), nw = uniform(rng, 1, 8 - nv);
  for (int i = 0; i < nv; ++i) inst.election.votes.approvals.push_back({random_set(inst.m(), rng), rand_weight(rng, 3), std::nullopt});
  for (int i = 0; i < nw; ++i) {
    CandSet s = random_interval(axis, rng);
    if (coin(rng, 0.4)) s |= bit(inst.preferred);
    if (!is_interval(s, axis)) s = bit(inst.preferred);
    inst.pool.approvals.push_back({s, 1, std::nullopt});
  }
  return compare(
      inst,
      [&] {
        return sp_approval_ccav(inst.m(), inst.election.votes.approvals, inst.pool.approvals, inst.preferred,
                                inst.budget, axis);
      },
      [&] { return brute_control(inst); });
}

Check check_approval_ccdv(Rng& rng) {
  auto inst = gen_approval(rng, AttackKind::Ccdv);
  const Axis& axis = *inst.axis;
  const int n = uniform(rng, 1, 8);
  for (int i = 0; i < n; ++i) {
    if (coin(rng, 0.75)) {
      std::optional<Flags> f;
      if (coin(rng, 0.3)) f = Flags{}.set(Flag::Deletable);
      inst.election.votes.approvals.push_back({random_interval(axis, rng), 1, f});
    } else {
      inst.election.votes.approvals.push_back({random_set(inst.m(), rng), rand_weight(rng, 3), Flags{}});
    }
  }
  return compare(
      inst,
      [&] {
        return sp_approval_ccdv_flagged(inst.m(), inst.election.votes.approvals, inst.preferred, inst.budget, axis);
      },
      [&] { return brute_control(inst); });
}

Check check_maverick_approval(Rng& rng) {
  const bool adding = coin(rng);
  auto inst = gen_approval(rng, adding ? AttackKind::Ccav : AttackKind::Ccdv);
  const Axis& axis = *inst.axis;
  const int m = inst.m();
  const int bound = uniform(rng, 0, 4);
  int mav = m >= 3 ? uniform(rng, 0, bound) : 0;
  inst.society = Society::maverick(bound);
  if (adding) {
    const int nv = uniform(rng, 0, 4), nw = uniform(rng, 1, 8 - nv);
    for (int i = 0; i < nv; ++i) inst.election.votes.approvals.push_back({random_set(m, rng), rand_weight(rng, 3), std::nullopt});
    for (int i = 0; i < nw; ++i) {
      CandSet s = mav > 0 ? random_non_interval(axis, rng) : random_interval(axis, rng);
      if (mav > 0) --mav;
      inst.pool.approvals.push_back({s, 1, std::nullopt});
    }
    std::shuffle(inst.pool.approvals.begin(), inst.pool.approvals.end(), rng);
  } else {
    const int n = uniform(rng, 1, 8);
    for (int i = 0; i < n; ++i) {
      CandSet s = mav > 0 ? random_non_interval(axis, rng) : random_interval(axis, rng);
      if (mav > 0) --mav;
      std::optional<Flags> f;
      std::int64_t w = 1;
      if (coin(rng, 0.2)) f = Flags{}, w = rand_weight(rng, 3);
      inst.election.votes.approvals.push_back({s, w, f});
    }
    std::shuffle(inst.election.votes.approvals.begin(), inst.election.votes.approvals.end(), rng);
  }
  return compare(inst, [&] { return maverick_control_approval(inst, bound); }, [&] { return brute_control(inst); });
}

Check check_maverick_condorcet(Rng& rng) {
  const bool adding = coin(rng);
  const int m = uniform(rng, 2, 5);
  auto inst = blank(adding ? AttackKind::Ccav : AttackKind::Ccdv, m, BallotKind::Orders, VotingSystem::condorcet(), rng);
  inst.budget = uniform(rng, 0, 3);
  const Axis& axis = *inst.axis;
  const int bound = uniform(rng, 0, 3);
  inst.society = Society::maverick(bound);
  int mav = uniform(rng, 0, bound);
  auto vote = [&] {
    auto r = mav > 0 ? random_ranking(m, rng) : random_sp_ranking(axis, rng);
    if (mav > 0) --mav;
    return r;
  };
  if (adding) {
    const int nv = uniform(rng, 0, 4), nw = uniform(rng, 1, 7 - nv);
    for (int i = 0; i < nv; ++i) inst.election.votes.orders.push_back({random_sp_ranking(axis, rng), rand_weight(rng, 2), std::nullopt});
    for (int i = 0; i < nw; ++i) inst.pool.orders.push_back({vote(), 1, std::nullopt});
    std::shuffle(inst.pool.orders.begin(), inst.pool.orders.end(), rng);
  } else {
    const int n = uniform(rng, 1, 7);
    for (int i = 0; i < n; ++i) {
      std::optional<Flags> f;
      if (coin(rng, 0.15)) f = Flags{};
      inst.election.votes.orders.push_back({vote(), 1, f});
    }
    std::shuffle(inst.election.votes.orders.begin(), inst.election.votes.orders.end(), rng);
  }
  return compare(inst, [&] { return maverick_control_condorcet(inst, bound); }, [&] { return brute_control(inst); });
}

AttackInstance gen_plurality_candidate(Rng& rng, bool adding, int m_lo, int m_hi, int n_hi,
                                       const std::function<std::vector<CandidateId>(const Axis&)>& vote) {
  const int m = uniform(rng, m_lo, m_hi);
  auto inst = blank(adding ? AttackKind::Ccac : AttackKind::Ccdc, m, BallotKind::Orders, VotingSystem::plurality(), rng);
  inst.budget = uniform(rng, 0, 3);
  const CandidateId p = inst.preferred;
  for (CandidateId c = 0; c < m; ++c) {
    if (c == p) continue;
    if (adding && coin(rng, 0.45)) inst.spoilers |= bit(c);
    if (!adding && coin(rng, 0.2)) inst.protected_set |= bit(c);
  }
  const int n = uniform(rng, 1, n_hi);
  for (int i = 0; i < n; ++i) inst.election.votes.orders.push_back({vote(*inst.axis), rand_weight(rng, 3), std::nullopt});
  return inst;
}

Check check_klocal(Rng& rng, bool adding, bool dodgson) {
  const int k = dodgson ? 2 : 1;
  auto inst = gen_plurality_candidate(rng, adding, 2, 6, 8, [&](const Axis& axis) {
    return dodgson ? random_dodgson_ranking(axis, 1, rng) : random_sp_ranking(axis, rng);
  });
  inst.society = dodgson ? Society::dodgson(1) : Society::sp();
  const Axis& axis = *inst.axis;
  return compare(
      inst,
      [&] {
        if (adding)
          return ccac_plurality_klocal(inst.registered(), inst.spoilers, inst.election.votes.orders, inst.preferred,
                                       inst.budget, axis, k);
        return ccdc_plurality_klocal(inst.registered(), inst.election.votes.orders, inst.preferred, inst.budget, axis, k,
                                     inst.protected_set);
      },
      [&] { return brute_control(inst); });
}

Check check_kmaverick(Rng& rng) {
  const bool adding = coin(rng);
  const int k = uniform(rng, 0, 2);
  int mav = uniform(rng, 0, k);
  auto inst = gen_plurality_candidate(rng, adding, 2, 6, 6, [&](const Axis& axis) {
    if (mav > 0) {
      --mav;
      return random_ranking(axis.size(), rng);
    }
    return random_sp_ranking(axis, rng);
  });
  inst.society = Society::maverick(k);
  std::shuffle(inst.election.votes.orders.begin(), inst.election.votes.orders.end(), rng);
  return compare(inst, [&] { return kmaverick_control_plurality(inst, k); }, [&] { return brute_control(inst); });
}

Check check_sc_plurality(Rng& rng) {
  const bool adding = coin(rng);
  auto inst = gen_plurality_candidate(rng, adding, 2, 6, 8, [&](const Axis& axis) { return random_sc_ranking(axis, rng); });
  inst.society = Society::single_caved();
  if (coin(rng, 0.05)) inst.election.votes.orders.clear();
  return compare(inst, [&] { return singlecaved_control_plurality(inst); }, [&] { return brute_control(inst); });
}

Check check_flagbribe(Rng& rng, BriberyVariant variant) {
  const int m = uniform(rng, 2, 5);
  const Axis axis = random_axis(m, rng);
  const CandidateId p = uniform(rng, 0, m - 1);
  const std::int64_t K = uniform(rng, 0, 3);
  std::vector<ApprovalVote> V;
  const int n = uniform(rng, 1, 8);
  for (int i = 0; i < n; ++i) {
    if (coin(rng, 0.75)) {
      std::optional<Flags> f;
      if (coin(rng, 0.3)) f = Flags{}.set(Flag::OpenToBribe);
      V.push_back({random_interval(axis, rng), 1, f});
    } else {
      V.push_back({random_set(m, rng), rand_weight(rng, 3), Flags{}});
    }
  }
  AttackInstance shown;
  shown.kind = AttackKind::Bribery;
  shown.election.candidates = names(m);
  shown.election.votes.kind = BallotKind::Approval;
  shown.election.votes.approvals = V;
  shown.system = VotingSystem::approval();
  shown.axis = axis;
  shown.preferred = p;
  shown.budget = K;
  shown.bribery_variant = variant;
  Check c;
  AttackOutcome want, got;
  try {
    want = brute_flagbribe(m, V, p, K, axis, variant);
  } catch (const CapExceeded&) {
    c.skipped = true;
    return c;
  }
  try {
    got = flagbribe_approval(m, V, p, K, axis, variant);
  } catch (const std::exception& e) {
    c.error = true;
    c.detail = std::string("solver: ") + e.what() + "\n" + describe(shown);
    return c;
  }
  c.yes = want.yes;
  if (got.yes != want.yes) {
    c.mismatch = true;
    c.detail = std::string("solver says ") + (got.yes ? "yes" : "no") + "\n" + describe(shown);
    return c;
  }
  if (got.yes) c = replayed(c, replay_flagbribe(m, V, p, K, axis, variant, got), describe(shown));
  return c;
}

Check check_bribery(Rng& rng, BriberyModel model, BriberyVariant variant) {
  const int m = uniform(rng, 2, 5);
  auto inst = blank(AttackKind::Bribery, m, BallotKind::Approval, VotingSystem::approval(), rng);
  inst.budget = uniform(rng, 0, 3);
  inst.bribery_model = model;
  inst.bribery_variant = variant;
  const Axis& axis = *inst.axis;
  const int bound = uniform(rng, 0, 3);
  inst.society = bound == 0 && coin(rng) ? Society::sp() : Society::maverick(bound);
  int special = uniform(rng, 0, bound);
  const int n = uniform(rng, 1, 8);
  for (int i = 0; i < n; ++i) {
    ApprovalVote v{random_interval(axis, rng), 1, std::nullopt};
    if (special > 0) {
      --special;
      if (m >= 3 && coin(rng, 0.7)) v.approved = random_non_interval(axis, rng);
      if (model == BriberyModel::Marked) v.flags = Flags{}.set(Flag::MaverickEnabled);
    }
    inst.election.votes.approvals.push_back(v);
  }
  std::shuffle(inst.election.votes.approvals.begin(), inst.election.votes.approvals.end(), rng);
  return compare(inst, [&] { return maverick_bribery_approval(inst, bribery_bound(inst.society)); },
                 [&] { return brute_bribery(inst); });
}

// ---- criterion 2 ----

Check check_veto_dichotomy(Rng& rng, int k, bool p_cell) {
  const int m = p_cell ? k + 3 : k + 2;
  auto inst = blank(AttackKind::Ccwm, m, BallotKind::Orders, VotingSystem::veto(), rng);
  inst.society = Society::maverick(k);
  const Axis& axis = *inst.axis;
  int mav = uniform(rng, 0, k);
  const int n = uniform(rng, 0, 4);
  for (int i = 0; i < n; ++i) {
    auto r = mav > 0 ? random_ranking(m, rng) : random_sp_ranking(axis, rng);
    if (mav > 0) --mav;
    inst.election.votes.orders.push_back({r, rand_weight(rng, 4), std::nullopt});
  }
  const int t = uniform(rng, 1, 4);
  for (int i = 0; i < t; ++i) inst.manipulators.push_back(rand_weight(rng, 4));
  CcwmRoute route{};
  Check c = compare(
      inst,
      [&] {
        auto v = ccwm_dispatch(inst);
        route = v.route;
        return v.outcome;
      },
      [&] { return brute_ccwm(inst); });
  const CcwmRoute want = p_cell ? CcwmRoute::VetoNeverVetoed : CcwmRoute::OracleNpHard;
  if (!c.skipped && !c.error && route != want && !c.mismatch) {
    c.mismatch = true;
    c.detail = "routed to " + to_string(route) + ", expected " + to_string(want) + "\n" + describe(inst);
  }
  return c;
}

// ---- criterion 3 ----

PartitionInstance random_partition(Rng& rng) {
  while (true) {
    const int n = uniform(rng, 2, 8);
    std::vector<std::int64_t> pool(12);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    PartitionInstance p{{pool.begin(), pool.begin() + n}};
    std::int64_t sum = std::accumulate(p.values.begin(), p.values.end(), std::int64_t{0});
    if (sum % 2 == 0) return p;
  }
}

X3CInstance random_x3c(Rng& rng, int k, int n) {
  X3CInstance x;
  x.base = 3 * k;
  auto triple = [&] {
    auto r = random_ranking(x.base, rng);
    return std::array<int, 3>{r[0], r[1], r[2]};
  };
  if (coin(rng) && n >= k) {
    auto r = random_ranking(x.base, rng);
    for (int j = 0; j < k; ++j) x.sets.push_back({r[3 * j], r[3 * j + 1], r[3 * j + 2]});
  }
  while (static_cast<int>(x.sets.size()) < n) x.sets.push_back(triple());
  std::shuffle(x.sets.begin(), x.sets.end(), rng);
  return x;
}

Check check_partition(Rng& rng, PartitionKind kind) {
  auto src = random_partition(rng);
  PartitionParams params;
  if (kind == PartitionKind::Scoring1Mav) {
    std::int64_t a2 = uniform(rng, 1, 3), a1 = uniform(rng, a2, a2 + 3), off = uniform(rng, 0, 1);
    params.alphas = {a1 + off, a2 + off, off};
  } else if (kind == PartitionKind::SingleCaved) {
    std::int64_t a2 = uniform(rng, 1, 3), a1 = uniform(rng, a2, 2 * a2), off = uniform(rng, 0, 1);
    params.alphas = {a1 + off, a2 + off, off};
  } else if (kind == PartitionKind::VetoKMav) {
    params.k = uniform(rng, 1, 4);
    params.m = uniform(rng, 3, std::min(6, params.k + 2));
  }
  AttackInstance inst = partition_to_ccwm(kind, src, params);
  const std::string shown = emit_partition(src) + describe(inst);
  ReductionReport rep;
  try {
    rep = verify_reduction(src, inst);
  } catch (const CapExceeded&) {
    Check c;
    c.skipped = true;
    return c;
  }
  Check c;
  c.yes = rep.source_yes;
  if (!rep.agree() || !rep.society_ok) {
    c.mismatch = true;
    c.detail = std::string(rep.agree() ? "society check failed" : "decision differs") + "\n" + shown;
    return c;
  }
  auto sol = solve_partition(src);
  if (kind == PartitionKind::Scoring1Mav && sol) {
    // The yes-branch ballots of the construction give a three-way tie at
    // (2 a1^3 - a1 a2^2 + a2^3) K, normalized alphas.
    const std::int64_t a1 = params.alphas[0] - params.alphas[2], a2 = params.alphas[1] - params.alphas[2];
    Profile prof = inst.election.votes;
    std::vector<bool> in(src.values.size(), false);
    for (int i : *sol) in[i] = true;
    for (std::size_t i = 0; i < src.values.size(); ++i)
      prof.orders.push_back({in[i] ? std::vector<CandidateId>{0, 1, 2} : std::vector<CandidateId>{0, 2, 1},
                             inst.manipulators[i], std::nullopt});
    auto alpha = std::vector<std::int64_t>{a1, a2, 0};
    std::vector<std::int64_t> s(3, 0);
    for (const auto& v : prof.orders)
      for (int pos = 0; pos < 3; ++pos) s[v.ranking[pos]] += alpha[pos] * v.weight;
    const std::int64_t tie = (2 * a1 * a1 * a1 - a1 * a2 * a2 + a2 * a2 * a2) * src.half();
    if (s[0] != tie || s[1] != tie || s[2] != tie) {
      c.mismatch = true;
      c.detail = "tie score " + std::to_string(tie) + " not reached: " + std::to_string(s[0]) + " " +
                 std::to_string(s[1]) + " " + std::to_string(s[2]) + "\n" + shown;
      return c;
    }
  }
  if (sol) {
    // The oracle's own witness must replay.
    auto out = brute_ccwm(inst, OracleCaps::relaxed());
    c = replayed(c, replay_witness(inst, out), shown);
  }
  return c;
}

Check check_x3c(Rng& rng, X3CKind kind, int k, int n_lo, int n_hi) {
  auto src = random_x3c(rng, k, uniform(rng, n_lo, n_hi));
  AttackInstance inst = x3c_to_control(kind, src);
  const std::string shown = emit_x3c(src);
  ReductionReport rep = verify_reduction(src, inst);
  Check c;
  c.yes = rep.source_yes;
  if (!rep.agree() || !rep.society_ok) {
    c.mismatch = true;
    c.detail = std::string(rep.agree() ? "society check failed" : "decision differs") + "\n" + shown;
    return c;
  }
  if (is_ccac(kind)) {
    const auto padded = pad_x3c(src, 2, 4);
    const std::int64_t kk = padded.k(), nn = static_cast<std::int64_t>(padded.sets.size());
    auto s = plurality_scores(inst.election.votes.orders, inst.m(), inst.registered());
    bool ok = s[0] == 2 * nn * kk + kk && s[1] == 2 * nn * kk;
    for (int i = 0; i < padded.base; ++i) ok = ok && s[2 + i] == 2 * nn * kk + 2 * kk;
    if (!ok) {
      c.mismatch = true;
      c.detail = "initial scores differ from p=2nk+k, d=2nk, b=2nk+2k\n" + shown;
      return c;
    }
    const int voters = static_cast<int>(inst.election.votes.size());
    std::int64_t expect = 6 * kk * nn + nn + (2 * nn * kk + kk - nn) + 2 * nn * kk;
    for (int i = 0; i < padded.base; ++i) {
      int ell = 0;
      for (const auto& t : padded.sets) ell += std::count(t.begin(), t.end(), i);
      expect += 2 * nn * kk + 2 * kk - 2 * kk * ell;
    }
    if (voters != expect) {
      c.mismatch = true;
      c.detail = "voter count " + std::to_string(voters) + " != " + std::to_string(expect) + "\n" + shown;
      return c;
    }
  }
  if (rep.reduced_yes) c = replayed(c, replay_witness(inst, brute_control(inst, OracleCaps::relaxed())), shown);
  return c;
}

// ---- criterion 4 ----

Check check_dp(Rng& rng, bool dodgson) {
  const int m = uniform(rng, 2, 8);
  const Axis axis = random_axis(m, rng);
  CandSet C = 0, A = 0;
  for (CandidateId c = 0; c < m; ++c) (coin(rng) ? C : A) |= bit(c);
  if (!C) C = bit(0), A &= ~bit(0);
  std::vector<LinearVote> V;
  const int n = uniform(rng, 1, 8);
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    auto r = dodgson ? random_dodgson_ranking(axis, 1, rng) : random_sp_ranking(axis, rng);
    V.push_back({r, rand_weight(rng, 3), std::nullopt});
    total += V.back().weight;
  }
  const std::int64_t t = uniform(rng, 0, static_cast<int>(total));
  const int k = dodgson ? 2 : 1;

  std::optional<int> best;
  const auto a = members(A);
  for (CandSet sub = 0; sub < (CandSet{1} << a.size()); ++sub) {
    CandSet add = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (sub >> i & 1) add |= bit(a[i]);
    auto s = plurality_scores(V, m, C | add);
    bool ok = true;
    for (CandidateId c : members(C | add)) ok = ok && s[c] <= t;
    if (ok && (!best || set_size(add) < *best)) best = set_size(add);
  }
  auto got = klocal_min_additions(C, A, V, axis, k, t);
  std::ostringstream shown;
  shown << "m=" << m << " axis=" << ranking_text(axis.order()) << " C=" << C << " A=" << A << " t=" << t << " k=" << k;
  for (const auto& v : V) shown << "\n  " << ranking_text(v.ranking) << " w=" << v.weight;
  if (got.additions != best)
    return boolean_check(false, "dp " + (got.additions ? std::to_string(*got.additions) : std::string("inf")) +
                                    " vs exhaustive " + (best ? std::to_string(*best) : std::string("inf")) + "\n" +
                                    shown.str());
  if (got.additions) {
    auto s = plurality_scores(V, m, C | got.added);
    bool ok = set_size(got.added) == *got.additions && (got.added & ~A) == 0;
    for (CandidateId c : members(C | got.added)) ok = ok && s[c] <= t;
    Check c;
    c.yes = true;
    c.replays = 1;
    if (!ok) {
      c.violations = 1;
      c.detail = "dp witness does not meet the bound\n" + shown.str();
    }
    return c;
  }
  return boolean_check(true, "");
}

// ---- criterion 5 ----

int kendall(const std::vector<CandidateId>& a, const std::vector<CandidateId>& b) {
  const int m = static_cast<int>(a.size());
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[b[i]] = i;
  int d = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) d += pos[a[i]] > pos[a[j]];
  return d;
}

int dodgson_reference(const std::vector<CandidateId>& r, const Axis& axis) {
  const int m = axis.size();
  int best = m * m;
  // Every SP order: the bottom-up peel choices form a bit string of length m-1.
  for (int mask = 0; mask < (1 << std::max(0, m - 1)); ++mask) {
    int l = 0, h = m - 1;
    std::vector<CandidateId> rev;
    for (int i = 0; i < m - 1; ++i) rev.push_back(mask >> i & 1 ? axis.at(l++) : axis.at(h--));
    rev.push_back(axis.at(l));
    std::reverse(rev.begin(), rev.end());
    best = std::min(best, kendall(r, rev));
  }
  return best;
}

int perception_reference(const std::vector<CandidateId>& r, const Axis& axis) {
  std::map<std::vector<CandidateId>, int> dist;
  std::queue<std::vector<CandidateId>> q;
  dist[axis.order()] = 0;
  q.push(axis.order());
  while (!q.empty()) {
    auto cur = q.front();
    q.pop();
    if (is_single_peaked(r, Axis(cur))) return dist[cur];
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      auto nxt = cur;
      std::swap(nxt[i], nxt[i + 1]);
      if (dist.emplace(nxt, dist[cur] + 1).second) q.push(nxt);
    }
  }
  return -1;
}

Check check_dodgson_distance(Rng& rng) {
  const int m = uniform(rng, 1, 6);
  const Axis axis = random_axis(m, rng);
  auto r = coin(rng, 0.3) ? random_dodgson_ranking(axis, 2, rng) : random_ranking(m, rng);
  int got = dodgson_distance(r, axis), want = dodgson_reference(r, axis);
  return boolean_check(got == want, "dodgson " + std::to_string(got) + " vs " + std::to_string(want) + " axis " +
                                        ranking_text(axis.order()) + " vote " + ranking_text(r));
}

Check check_perception_distance(Rng& rng) {
  const int m = uniform(rng, 1, 6);
  const Axis axis = random_axis(m, rng);
  auto r = coin(rng, 0.3) ? random_perception_ranking(axis, 2, rng) : random_ranking(m, rng);
  auto got = perception_flip_distance(r, axis, m * m);
  int want = perception_reference(r, axis);
  return boolean_check(got && *got == want, "perception " + (got ? std::to_string(*got) : std::string("none")) +
                                                " vs " + std::to_string(want) + " axis " + ranking_text(axis.order()) +
                                                " vote " + ranking_text(r));
}

Check check_locality_implication(Rng& rng) {
  const int m = uniform(rng, 2, 6);
  const int k = uniform(rng, 0, 2);
  const Axis axis = random_axis(m, rng);
  const bool dodgson = coin(rng);
  std::vector<LinearVote> V;
  const int n = uniform(rng, 1, 8);
  for (int i = 0; i < n; ++i) {
    auto r = dodgson ? random_dodgson_ranking(axis, k, rng) : random_perception_ranking(axis, k, rng);
    V.push_back({r, rand_weight(rng, 3), std::nullopt});
  }
  std::ostringstream shown;
  shown << "m=" << m << " k=" << k << " axis=" << ranking_text(axis.order());
  for (const auto& v : V) {
    shown << "\n  " << ranking_text(v.ranking);
    int dd = dodgson_distance(v.ranking, axis);
    auto pd = perception_flip_distance(v.ranking, axis, k);
    if (dd > k && !pd) return boolean_check(false, "generator produced a vote beyond distance k\n" + shown.str());
  }
  bool ok = locality_check(full_set(m), 0, V, axis, k + 1, LocalityMode::Exhaustive);
  return boolean_check(ok, "election is not (k+1)-local\n" + shown.str());
}

// ---- criterion 6 ----

Check check_demaverickify(Rng& rng) {
  const int m = uniform(rng, 1, 8);
  const Axis axis = random_axis(m, rng);
  std::vector<ApprovalVote> V;
  const int n = uniform(rng, 0, 8);
  for (int i = 0; i < n; ++i) V.push_back({random_set(m, rng), rand_weight(rng, 5), std::nullopt});
  auto out = demaverickify_approval(V, axis);
  bool ok = approval_scores(V, m) == approval_scores(out, m);
  for (const auto& v : out) ok = ok && !is_maverick(v, axis);
  return boolean_check(ok, "scores or consistency changed");
}

Check check_pad_epsilon(Rng& rng, int i) {
  const X3CKind kind = i % 2 ? X3CKind::CcdcSwoon : X3CKind::CcacSwoon;
  auto src = random_x3c(rng, 2, uniform(rng, 2, 5));
  auto inst = x3c_to_control(kind, src);
  const int t = uniform(rng, 1, 3);
  auto padded = pad_for_epsilon(inst, t);
  auto before = brute_control(inst, OracleCaps::relaxed());
  auto after = brute_control(padded, OracleCaps::relaxed());
  Check c;
  c.yes = after.yes;
  const Axis& axis = *inst.axis;
  const bool same_mav = count_mavericks(inst.election.votes, axis) == count_mavericks(padded.election.votes, axis);
  if (before.yes != after.yes || !same_mav || !society_holds(padded)) {
    c.mismatch = true;
    c.detail = std::string(before.yes != after.yes ? "padding changed the decision" : "padding votes are not SP") +
               " (t=" + std::to_string(t) + ")\n" + emit_x3c(src);
    return c;
  }
  if (after.yes) c = replayed(c, replay_witness(padded, after), emit_x3c(src));
  return c;
}

// ---- registry ----

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> r = [] {
    std::map<std::string, SuiteDef> r;
    auto plain = [](int count, double limit, std::function<Check(Rng&)> f) {
      return SuiteDef{count, limit, [f](Rng& rng) { return f(rng); }};
    };
    r["veto-maverick"] = plain(200, 120, [](Rng& g) { return check_veto(g, VetoSoc::Maverick); });
    r["veto-swoon"] = plain(200, 120, [](Rng& g) { return check_veto(g, VetoSoc::Swoon); });
    r["veto-dodgson"] = plain(200, 120, [](Rng& g) { return check_veto(g, VetoSoc::Dodgson); });
    r["singlecaved-scoring"] = plain(200, 120, check_sc_scoring);
    r["approval-ccav"] = plain(300, 120, check_approval_ccav);
    r["approval-ccdv"] = plain(300, 120, check_approval_ccdv);
    r["maverick-approval"] = plain(200, 120, check_maverick_approval);
    r["maverick-condorcet"] = plain(200, 120, check_maverick_condorcet);
    r["klocal-ccac-sp"] = plain(200, 120, [](Rng& g) { return check_klocal(g, true, false); });
    r["klocal-ccac-dodgson"] = plain(200, 120, [](Rng& g) { return check_klocal(g, true, true); });
    r["klocal-ccdc-sp"] = plain(200, 120, [](Rng& g) { return check_klocal(g, false, false); });
    r["klocal-ccdc-dodgson"] = plain(200, 120, [](Rng& g) { return check_klocal(g, false, true); });
    r["kmaverick-plurality"] = plain(200, 120, check_kmaverick);
    r["singlecaved-plurality"] = plain(200, 120, check_sc_plurality);
    for (auto v : {BriberyVariant::Plain, BriberyVariant::Negative, BriberyVariant::StrongNegative}) {
      r["flagbribe-" + to_string(v)] = plain(300, 120, [v](Rng& g) { return check_flagbribe(g, v); });
      for (auto mo : {BriberyModel::Standard, BriberyModel::Marked})
        r["bribery-" + to_string(mo) + "-" + to_string(v)] =
            plain(200, 120, [mo, v](Rng& g) { return check_bribery(g, mo, v); });
    }
    for (int k : {1, 2}) {
      r["veto-dichotomy-k" + std::to_string(k) + "-p"] =
          plain(50, 0, [k](Rng& g) { return check_veto_dichotomy(g, k, true); });
      r["veto-dichotomy-k" + std::to_string(k) + "-np"] =
          plain(50, 0, [k](Rng& g) { return check_veto_dichotomy(g, k, false); });
    }
    for (auto kind : {PartitionKind::Scoring1Mav, PartitionKind::VetoKMav, PartitionKind::VetoSwoon4,
                      PartitionKind::VetoDodgson4, PartitionKind::SingleCaved})
      r["partition-" + to_string(kind)] = plain(30, 0, [kind](Rng& g) { return check_partition(g, kind); });
    r["x3c-ccacswoon"] = plain(10, 0, [](Rng& g) { return check_x3c(g, X3CKind::CcacSwoon, 2, 2, 5); });
    r["x3c-ccdcswoon"] = plain(10, 0, [](Rng& g) { return check_x3c(g, X3CKind::CcdcSwoon, 2, 2, 5); });
    r["x3c-ccdcswoon-k6"] = plain(2, 300, [](Rng& g) { return check_x3c(g, X3CKind::CcdcSwoon, 6, 7, 7); });
    r["x3c-dodgson-perception"] = plain(8, 0, [](Rng& g) {
      static const X3CKind kinds[] = {X3CKind::CcacDodgsonM2, X3CKind::CcacPerceptionM2, X3CKind::CcdcDodgsonM2,
                                      X3CKind::CcdcPerceptionM2};
      return check_x3c(g, kinds[uniform(g, 0, 3)], 2, 2, 4);
    });
    r["klocal-dp-sp"] = plain(100, 0, [](Rng& g) { return check_dp(g, false); });
    r["klocal-dp-dodgson"] = plain(50, 0, [](Rng& g) { return check_dp(g, true); });
    r["dodgson-distance"] = plain(500, 0, check_dodgson_distance);
    r["perception-distance"] = plain(500, 0, check_perception_distance);
    r["locality-implication"] = plain(100, 0, check_locality_implication);
    r["demaverickify"] = plain(500, 0, check_demaverickify);
    return r;
  }();
  return r;
}

SuiteResult run_checks(const std::string& name, int count, double limit, std::uint64_t seed, int threads,
                       const std::function<Check(Rng&, int)>& fn) {
  SuiteResult res;
  res.name = name;
  res.required = count;
  res.time_limit = limit;
  std::vector<Check> checks(count);
  const auto start = std::chrono::steady_clock::now();
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      Rng rng = instance_rng(seed, name, i);
      try {
        checks[i] = fn(rng, i);
      } catch (const std::exception& e) {
        checks[i].error = true;
        checks[i].detail = std::string("unexpected exception: ") + e.what();
      }
    }
  };
  threads = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& c : checks) {
    if (c.skipped) {
      ++res.skipped;
      continue;
    }
    ++res.instances;
    res.yes += c.yes;
    res.mismatches += c.mismatch;
    res.errors += c.error;
    res.replay_checked += c.replays;
    res.replay_violations += c.violations;
    if (res.first_failure.empty() && !c.detail.empty()) res.first_failure = c.detail;
  }
  return res;
}

}  // namespace

bool SuiteResult::pass() const {
  return instances >= required && mismatches == 0 && errors == 0 && replay_violations == 0 &&
         (time_limit <= 0 || seconds <= time_limit);
}

double CriterionResult::seconds() const {
  double s = 0;
  for (const auto& x : suites) s += x.seconds;
  return s;
}

bool CriterionResult::pass() const {
  if (time_limit > 0 && seconds() > time_limit) return false;
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass(); });
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, def] : registry()) out.push_back(name);
  out.push_back("pad-epsilon");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> criterion_suites(int id) {
  switch (id) {
    case 1: {
      std::vector<std::string> out{"veto-maverick",       "veto-swoon",          "veto-dodgson",
                                   "singlecaved-scoring", "approval-ccav",       "approval-ccdv",
                                   "maverick-approval",   "maverick-condorcet",  "klocal-ccac-sp",
                                   "klocal-ccac-dodgson", "klocal-ccdc-sp",      "klocal-ccdc-dodgson",
                                   "kmaverick-plurality", "singlecaved-plurality"};
      for (auto v : {"plain", "negative", "strongnegative"}) out.push_back(std::string("flagbribe-") + v);
      for (auto mo : {"standard", "marked"})
        for (auto v : {"plain", "negative", "strongnegative"}) out.push_back(std::string("bribery-") + mo + "-" + v);
      return out;
    }
    case 2:
      return {"veto-dichotomy-k1-p", "veto-dichotomy-k1-np", "veto-dichotomy-k2-p", "veto-dichotomy-k2-np"};
    case 3:
      return {"partition-scoring1mav", "partition-vetokmav",   "partition-vetoswoon4",   "partition-vetododgson4",
              "partition-singlecaved", "x3c-ccacswoon",        "x3c-ccdcswoon",          "x3c-ccdcswoon-k6",
              "x3c-dodgson-perception"};
    case 4: return {"klocal-dp-sp", "klocal-dp-dodgson"};
    case 5: return {"dodgson-distance", "perception-distance", "locality-implication"};
    case 6: return {"demaverickify", "pad-epsilon"};
    default: return {};
  }
}

std::string criterion_title(int id) {
  switch (id) {
    case 1: return "oracle-equivalence sweeps";
    case 2: return "veto dichotomy routing";
    case 3: return "reduction round trips";
    case 4: return "k-local DP vs exhaustive search";
    case 5: return "structure distances and locality";
    case 6: return "score conservation and padding";
    case 7: return "witness replay";
    default: return "?";
  }
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int threads) {
  if (name == "pad-epsilon")
    return run_checks(name, 20, 0, seed, threads, [](Rng& g, int i) { return check_pad_epsilon(g, i); });
  auto it = registry().find(name);
  if (it == registry().end()) throw PreconditionError("unknown suite '" + name + "'");
  const SuiteDef& def = it->second;
  return run_checks(name, def.count, def.time_limit, seed, threads, [&def](Rng& g, int) { return def.fn(g); });
}

CriterionResult run_criterion(int id, std::uint64_t seed, int threads) {
  if (id < 1 || id > 6) throw PreconditionError("criteria 1 to 6 run suites; 7 summarizes them");
  CriterionResult c;
  c.id = id;
  c.title = criterion_title(id);
  if (id == 4) c.time_limit = 60;
  for (const auto& s : criterion_suites(id)) c.suites.push_back(run_suite(s, seed, threads));
  return c;
}

CriterionResult replay_summary(const std::vector<CriterionResult>& done) {
  CriterionResult c;
  c.id = 7;
  c.title = criterion_title(7);
  SuiteResult s;
  s.name = "replay-all-yes-witnesses";
  for (const auto& crit : done)
    for (const auto& x : crit.suites) {
      s.instances += x.replay_checked;
      s.replay_violations += x.replay_violations;
      s.seconds += 0;
      if (s.first_failure.empty() && x.replay_violations) s.first_failure = x.name + ": " + x.first_failure;
    }
  s.required = 1;
  c.suites.push_back(s);
  return c;
}

std::string format(const SuiteResult& s, bool timing) {
  std::ostringstream o;
  o << (s.pass() ? "PASS " : "FAIL ") << s.name << ": " << s.instances << "/" << s.required << " evaluated, " << s.yes
    << " yes, " << s.mismatches << " mismatches, " << s.errors << " errors, " << s.skipped << " skipped, "
    << s.replay_violations << "/" << s.replay_checked << " replay violations";
  if (!timing) return o.str();
  o.setf(std::ios::fixed);
  o.precision(2);
  o << ", " << s.seconds << "s";
  if (s.time_limit > 0) o << " (limit " << s.time_limit << "s)";
  return o.str();
}

std::string format(const CriterionResult& c, bool timing) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(2);
  o << "criterion " << c.id << " [" << c.title << "]: " << (c.pass() ? "PASS" : "FAIL") << " (" << c.suites.size()
    << " suites";
  if (timing) o << ", " << c.seconds() << "s";
  if (timing && c.time_limit > 0) o << ", limit " << c.time_limit << "s";
  o << ")";
  return o.str();
}

}  // namespace nearsp::acceptance
