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

#include "nearsp/reductions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "nearsp/error.hpp"
#include "nearsp/structure.hpp"

namespace nearsp {

std::int64_t PartitionInstance::half() const {
  return std::accumulate(values.begin(), values.end(), std::int64_t{0}) / 2;
}

void validate(const PartitionInstance& p) {
  if (p.values.empty()) throw PreconditionError("partition: no values");
  std::set<std::int64_t> seen;
  std::int64_t sum = 0;
  for (auto v : p.values) {
    if (v <= 0) throw PreconditionError("partition: values must be positive");
    if (!seen.insert(v).second) throw PreconditionError("partition: values must be distinct");
    sum += v;
  }
  if (sum % 2) throw PreconditionError("partition: values must have an even sum");
}

void validate(const X3CInstance& x) {
  if (x.base <= 0 || x.base % 3) throw PreconditionError("x3c: base size must be a positive multiple of 3");
  for (const auto& s : x.sets) {
    for (int e : s)
      if (e < 0 || e >= x.base) throw PreconditionError("x3c: set element out of range");
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) throw PreconditionError("x3c: set elements must be distinct");
  }
}

std::optional<std::vector<int>> solve_partition(const PartitionInstance& p) {
  validate(p);
  const std::int64_t K = p.half();
  const int n = static_cast<int>(p.values.size());
  // reach[i][s]: some subset of the first i values sums to s.
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(K + 1, false));
  reach[0][0] = true;
  for (int i = 0; i < n; ++i)
    for (std::int64_t s = 0; s <= K; ++s)
      reach[i + 1][s] = reach[i][s] || (s >= p.values[i] && reach[i][s - p.values[i]]);
  if (!reach[n][K]) return std::nullopt;
  std::vector<int> pick;
  for (int i = n, s = static_cast<int>(K); i > 0; --i) {
    if (reach[i - 1][s]) continue;
    pick.push_back(i - 1);
    s -= static_cast<int>(p.values[i - 1]);
  }
  std::reverse(pick.begin(), pick.end());
  return pick;
}

std::optional<std::vector<int>> solve_x3c(const X3CInstance& x) {
  validate(x);
  std::vector<int> chosen;
  std::vector<bool> covered(x.base, false);
  std::function<bool()> go = [&]() {
    int e = static_cast<int>(std::find(covered.begin(), covered.end(), false) - covered.begin());
    if (e == x.base) return true;
    for (int j = 0; j < static_cast<int>(x.sets.size()); ++j) {
      const auto& s = x.sets[j];
      if (std::find(s.begin(), s.end(), e) == s.end()) continue;
      if (covered[s[0]] || covered[s[1]] || covered[s[2]]) continue;
      for (int v : s) covered[v] = true;
      chosen.push_back(j);
      if (go()) return true;
      chosen.pop_back();
      for (int v : s) covered[v] = false;
    }
    return false;
  };
  if (!go()) return std::nullopt;
  return chosen;
}

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
      out.emplace_back();
      continue;
    }
    auto b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

std::vector<std::int64_t> numbers(const std::string& s, int line) {
  std::istringstream in(s);
  std::vector<std::int64_t> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

PartitionInstance parse_partition(std::string_view text) {
  PartitionInstance p;
  bool seen = false;
  auto lines = content_lines(text);
  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    const auto& l = lines[i];
    if (l.empty()) continue;
    if (l.rfind("values:", 0) != 0) throw ParseError(i + 1, "expected 'values:'");
    if (seen) throw ParseError(i + 1, "duplicate 'values:' line");
    seen = true;
    p.values = numbers(l.substr(7), i + 1);
  }
  if (!seen) throw ParseError(0, "missing 'values:' line");
  validate(p);
  return p;
}

X3CInstance parse_x3c(std::string_view text) {
  X3CInstance x;
  bool seen = false;
  auto lines = content_lines(text);
  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    const auto& l = lines[i];
    if (l.empty()) continue;
    if (l.rfind("base:", 0) == 0) {
      if (seen) throw ParseError(i + 1, "duplicate 'base:' line");
      auto v = numbers(l.substr(5), i + 1);
      if (v.size() != 1) throw ParseError(i + 1, "'base:' takes one integer");
      x.base = static_cast<int>(v[0]);
      seen = true;
    } else if (l.rfind("set:", 0) == 0) {
      auto v = numbers(l.substr(4), i + 1);
      if (v.size() != 3) throw ParseError(i + 1, "a set has exactly three elements");
      x.sets.push_back({static_cast<int>(v[0]) - 1, static_cast<int>(v[1]) - 1, static_cast<int>(v[2]) - 1});
    } else {
      throw ParseError(i + 1, "expected 'base:' or 'set:'");
    }
  }
  if (!seen) throw ParseError(0, "missing 'base:' line");
  validate(x);
  return x;
}

std::string emit_partition(const PartitionInstance& p) {
  std::string s = "values:";
  for (auto v : p.values) s += " " + std::to_string(v);
  return s + "\n";
}

std::string emit_x3c(const X3CInstance& x) {
  std::string s = "base: " + std::to_string(x.base) + "\n";
  for (const auto& t : x.sets)
    s += "set: " + std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1) + " " + std::to_string(t[2] + 1) + "\n";
  return s;
}

std::string to_string(PartitionKind k) {
  switch (k) {
    case PartitionKind::Scoring1Mav: return "scoring1mav";
    case PartitionKind::VetoKMav: return "vetokmav";
    case PartitionKind::VetoSwoon4: return "vetoswoon4";
    case PartitionKind::VetoDodgson4: return "vetododgson4";
    case PartitionKind::SingleCaved: return "singlecaved";
  }
  return "?";
}

PartitionKind parse_partition_kind(std::string_view s) {
  for (auto k : {PartitionKind::Scoring1Mav, PartitionKind::VetoKMav, PartitionKind::VetoSwoon4,
                 PartitionKind::VetoDodgson4, PartitionKind::SingleCaved})
    if (to_string(k) == s) return k;
  throw PreconditionError("unknown partition kind '" + std::string(s) + "'");
}

std::string to_string(X3CKind k) {
  switch (k) {
    case X3CKind::CcacSwoon: return "ccacswoon";
    case X3CKind::CcdcSwoon: return "ccdcswoon";
    case X3CKind::CcacDodgsonM2: return "ccacdodgsonm2";
    case X3CKind::CcdcDodgsonM2: return "ccdcdodgsonm2";
    case X3CKind::CcacPerceptionM2: return "ccacperceptionm2";
    case X3CKind::CcdcPerceptionM2: return "ccdcperceptionm2";
  }
  return "?";
}

X3CKind parse_x3c_kind(std::string_view s) {
  for (auto k : {X3CKind::CcacSwoon, X3CKind::CcdcSwoon, X3CKind::CcacDodgsonM2, X3CKind::CcdcDodgsonM2,
                 X3CKind::CcacPerceptionM2, X3CKind::CcdcPerceptionM2})
    if (to_string(k) == s) return k;
  throw PreconditionError("unknown x3c kind '" + std::string(s) + "'");
}

bool is_ccac(X3CKind k) {
  return k == X3CKind::CcacSwoon || k == X3CKind::CcacDodgsonM2 || k == X3CKind::CcacPerceptionM2;
}

// ---- PARTITION gadgets ----

AttackInstance partition_to_ccwm(PartitionKind kind, const PartitionInstance& src, const PartitionParams& params) {
  validate(src);
  const std::int64_t K = src.half();
  AttackInstance inst;
  inst.kind = AttackKind::Ccwm;
  inst.election.votes.kind = BallotKind::Orders;
  inst.pool.kind = BallotKind::Orders;
  inst.preferred = 0;
  auto add = [&](std::vector<CandidateId> r, std::int64_t w) {
    if (w > 0) inst.election.votes.orders.push_back({std::move(r), w, std::nullopt});
  };
  auto manipulators = [&](std::int64_t factor) {
    for (auto v : src.values) inst.manipulators.push_back(factor * v);
  };

  switch (kind) {
    case PartitionKind::Scoring1Mav:
    case PartitionKind::SingleCaved: {
      if (params.alphas.size() != 3) throw PreconditionError("three-candidate gadget needs three alphas");
      const std::int64_t a1 = params.alphas[0] - params.alphas[2], a2 = params.alphas[1] - params.alphas[2];
      // p = 0, a = 1, b = 2; axis a p b.
      inst.election.candidates = {"p", "a", "b"};
      inst.axis = Axis({1, 0, 2});
      inst.system = VotingSystem::scoring(params.alphas);
      if (kind == PartitionKind::Scoring1Mav) {
        if (!(a1 >= a2 && a2 > 0)) throw PreconditionError("scoring1mav needs a1 >= a2 > a3");
        inst.society = Society::maverick(1);
        add({1, 2, 0}, (2 * a1 - a2) * a1 * K);
        add({2, 0, 1}, (2 * a1 - a2) * (a1 - a2) * K);
        manipulators(a1 * a1 - a1 * a2 + a2 * a2);
      } else {
        if (!(a1 >= a2 && a2 > 0 && a1 <= 2 * a2)) throw PreconditionError("singlecaved gadget needs a2 < a1 <= 2 a2 after normalizing");
        inst.society = Society::single_caved();
        add({1, 2, 0}, (2 * a2 - a1) * K);
        add({2, 1, 0}, (2 * a2 - a1) * K);
        manipulators(a1 + a2);
      }
      break;
    }
    case PartitionKind::VetoKMav: {
      const int m = params.m;
      if (m < 3 || m > params.k + 2) throw PreconditionError("vetokmav needs 3 <= m <= k+2");
      // p = 0, a = 1, b = 2, c_i = 2 + i; axis a p c_1 ... c_{m-3} b.
      inst.election.candidates = {"p", "a", "b"};
      for (int i = 1; i <= m - 3; ++i) inst.election.candidates.push_back("c" + std::to_string(i));
      std::vector<CandidateId> order{1, 0};
      for (int i = 1; i <= m - 3; ++i) order.push_back(2 + i);
      order.push_back(2);
      inst.axis = Axis(order);
      inst.system = VotingSystem::veto();
      inst.society = Society::maverick(params.k);
      for (CandidateId c : order) {
        if (c == 1 || c == 2) continue;
        std::vector<CandidateId> r;
        for (CandidateId x : order)
          if (x != c) r.push_back(x);
        r.push_back(c);
        add(r, K);
      }
      manipulators(1);
      break;
    }
    case PartitionKind::VetoSwoon4:
    case PartitionKind::VetoDodgson4: {
      // p = 0, a = 1, b = 2, c = 3; axis a p b c.
      inst.election.candidates = {"p", "a", "b", "c"};
      inst.axis = Axis({1, 0, 2, 3});
      inst.system = VotingSystem::veto();
      if (kind == PartitionKind::VetoSwoon4) {
        inst.society = Society::swoon(1, 0);
        add({1, 3, 2, 0}, K);
        add({3, 1, 0, 2}, K);
      } else {
        inst.society = Society::dodgson(1);
        add({3, 2, 1, 0}, K);
        add({1, 0, 3, 2}, K);
      }
      manipulators(1);
      break;
    }
  }
  return inst;
}

// ---- X3C gadgets ----

X3CInstance pad_x3c(const X3CInstance& x, int min_k, int min_n) {
  validate(x);
  X3CInstance out = x;
  while (out.k() < min_k || static_cast<int>(out.sets.size()) < min_n) {
    const int b = out.base;
    out.sets.push_back({b, b + 1, b + 2});
    out.base += 3;
  }
  return out;
}

LinearVote complete_top_two(CandidateId ci, CandidateId cj, const Axis& axis, TopTwoSociety society,
                            bool rank_first_last) {
  const int m = axis.size();
  if (ci == cj) throw PreconditionError("top two candidates must differ");
  const CandidateId first = axis.at(0);
  if (rank_first_last && (ci == first || cj == first))
    throw PreconditionError("cannot rank the axis-first candidate last when it is on top");
  LinearVote v;
  if (society == TopTwoSociety::DodgsonM2) {
    auto r = sp_order(axis, ci, rank_first_last);
    r.erase(std::find(r.begin(), r.end(), cj));
    r.insert(r.begin() + 1, cj);
    v.ranking = r;
  } else {
    // Move cj next to ci on its own side of ci.
    auto order = axis.order();
    order.erase(std::find(order.begin(), order.end(), cj));
    auto at = std::find(order.begin(), order.end(), ci) - order.begin();
    order.insert(order.begin() + at + (axis.pos(cj) > axis.pos(ci) ? 1 : 0), cj);
    Axis moved(order);
    std::vector<CandidateId> r{ci, cj};
    int lo = std::min(moved.pos(ci), moved.pos(cj)), hi = std::max(moved.pos(ci), moved.pos(cj));
    auto right = [&] {
      for (int i = hi + 1; i < m; ++i) r.push_back(moved.at(i));
    };
    auto left = [&] {
      for (int i = lo - 1; i >= 0; --i) r.push_back(moved.at(i));
    };
    if (rank_first_last) right(), left();
    else left(), right();
    v.ranking = r;
  }
  return v;
}

AttackInstance x3c_to_control(X3CKind kind, const X3CInstance& raw, bool pad) {
  validate(raw);
  const bool ccac = is_ccac(kind);
  const int min_k = ccac ? 2 : 6, min_n = ccac ? 4 : 0;
  if (!pad && (raw.k() < min_k || static_cast<int>(raw.sets.size()) < min_n))
    throw PreconditionError(ccac ? "ccac gadget needs k >= 2 and n >= 4" : "ccdc gadget needs k > 5");
  const X3CInstance x = pad ? pad_x3c(raw, min_k, min_n) : raw;
  const int k = x.k(), n = static_cast<int>(x.sets.size()), nb = x.base;

  AttackInstance inst;
  inst.kind = ccac ? AttackKind::Ccac : AttackKind::Ccdc;
  inst.system = VotingSystem::plurality();
  inst.election.votes.kind = BallotKind::Orders;
  inst.pool.kind = BallotKind::Orders;
  inst.budget = k;

  // Ids: p = 0, [d = 1], then b_1..b_3k, then a_1..a_n; axis in id order.
  auto& names = inst.election.candidates;
  names.push_back("p");
  if (ccac) names.push_back("d");
  const CandidateId p = 0, d = 1, b0 = ccac ? 2 : 1, a0 = b0 + nb;
  for (int i = 1; i <= nb; ++i) names.push_back("b" + std::to_string(i));
  for (int j = 1; j <= n; ++j) names.push_back("a" + std::to_string(j));
  const int m = static_cast<int>(names.size());
  std::vector<CandidateId> ids(m);
  std::iota(ids.begin(), ids.end(), 0);
  const Axis axis(ids);
  inst.axis = axis;
  inst.preferred = p;
  if (ccac)
    for (int j = 0; j < n; ++j) inst.spoilers |= bit(a0 + j);

  const bool swoon = kind == X3CKind::CcacSwoon || kind == X3CKind::CcdcSwoon;
  const bool dodgson = kind == X3CKind::CcacDodgsonM2 || kind == X3CKind::CcdcDodgsonM2;
  inst.society = swoon ? Society::swoon(1, 0) : dodgson ? Society::dodgson(m - 2) : Society::perception_flip(m - 2);

  auto push = [&](std::vector<CandidateId> r, int copies) {
    for (int c = 0; c < copies; ++c) inst.election.votes.orders.push_back({r, 1, std::nullopt});
  };
  // top, then second, then the rest; p last when asked.
  auto two = [&](CandidateId top, CandidateId second, bool p_last) {
    if (swoon) {
      auto r = sp_order(axis, second, p_last, full_set(m) & ~bit(top));
      r.insert(r.begin(), top);
      return r;
    }
    return complete_top_two(top, second, axis, dodgson ? TopTwoSociety::DodgsonM2 : TopTwoSociety::PerceptionM2, p_last)
        .ranking;
  };
  auto one = [&](CandidateId top, bool p_last) { return sp_order(axis, top, p_last); };

  if (ccac) {
    std::vector<int> ell(nb, 0);
    for (const auto& s : x.sets)
      for (int e : s) ++ell[e];
    for (int j = 0; j < n; ++j)
      for (int e : x.sets[j]) push(two(a0 + j, b0 + e, false), 2 * k);
    for (int j = 0; j < n; ++j) push(two(a0 + j, p, false), 1);
    push(one(p, false), 2 * n * k + k - n);
    push(one(d, false), 2 * n * k);
    for (int i = 0; i < nb; ++i) push(one(b0 + i, false), 2 * n * k + 2 * k - 2 * k * ell[i]);
  } else {
    for (int j = 0; j < n; ++j)
      for (int e : x.sets[j]) push(two(a0 + j, b0 + e, true), 1);
    for (int j = 0; j < n; ++j) push(two(a0 + j, p, false), 1);
    for (int i = 0; i < nb; ++i) push(one(b0 + i, true), k - 1);
  }
  return inst;
}

AttackInstance pad_for_epsilon(const AttackInstance& inst, int t) {
  if (t < 0) throw PreconditionError("padding block count must be nonnegative");
  const auto& names = inst.election.candidates;
  if (!inst.axis || inst.election.votes.kind != BallotKind::Orders || names.empty() || names[0] != "p" ||
      (inst.kind != AttackKind::Ccac && inst.kind != AttackKind::Ccdc) || inst.society != Society::swoon(1, 0))
    throw PreconditionError("pad_for_epsilon needs a swoon X3C gadget");
  const bool ccac = inst.kind == AttackKind::Ccac;
  if (ccac != (names.size() > 1 && names[1] == "d")) throw PreconditionError("pad_for_epsilon needs a swoon X3C gadget");
  std::vector<CandidateId> bs;
  for (CandidateId c = 0; c < inst.m(); ++c)
    if (names[c].size() > 1 && names[c][0] == 'b') bs.push_back(c);
  AttackInstance out = inst;
  const Axis& axis = *inst.axis;
  for (int block = 0; block < t; ++block) {
    for (CandidateId b : bs) out.election.votes.orders.push_back({sp_order(axis, b, true), 1, std::nullopt});
    out.election.votes.orders.push_back({sp_order(axis, 0), 1, std::nullopt});
    if (ccac) out.election.votes.orders.push_back({sp_order(axis, 1, true), 1, std::nullopt});
  }
  return out;
}

// ---- verification ----

bool society_holds(const AttackInstance& inst) {
  if (inst.society.kind == SocietyKind::None) return true;
  if (!inst.axis) return false;
  if (inst.election.votes.kind != BallotKind::Orders) {
    if (inst.society.kind == SocietyKind::Maverick) return count_mavericks(inst.election.votes, *inst.axis) <= inst.society.k;
    if (inst.society.kind == SocietyKind::SinglePeaked) return count_mavericks(inst.election.votes, *inst.axis) == 0;
    return false;
  }
  if (inst.society.kind == SocietyKind::Maverick) return count_mavericks(inst.election.votes, *inst.axis) <= inst.society.k;
  for (const auto& v : inst.election.votes.orders)
    if (!society_admits(v.ranking, *inst.axis, inst.society)) return false;
  return true;
}

ReductionReport verify_reduction(const PartitionInstance& src, const AttackInstance& reduced, const OracleCaps& caps) {
  ReductionReport r;
  r.source_yes = solve_partition(src).has_value();
  r.reduced_yes = brute_solve(reduced, caps).yes;
  r.society_ok = society_holds(reduced);
  return r;
}

ReductionReport verify_reduction(const X3CInstance& src, const AttackInstance& reduced, const OracleCaps& caps) {
  ReductionReport r;
  r.source_yes = solve_x3c(src).has_value();
  r.reduced_yes = brute_solve(reduced, caps).yes;
  r.society_ok = society_holds(reduced);
  return r;
}

}  // namespace nearsp
