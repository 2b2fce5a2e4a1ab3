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

#include "nearsp/testing.hpp"

#include <algorithm>
#include <numeric>

#include "nearsp/structure.hpp"

namespace nearsp::testing {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<std::string> names(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "c" + std::to_string(i));
  return out;
}

std::vector<CandidateId> random_ranking(int m, Rng& rng) {
  std::vector<CandidateId> r(m);
  std::iota(r.begin(), r.end(), 0);
  std::shuffle(r.begin(), r.end(), rng);
  return r;
}

Axis random_axis(int m, Rng& rng) { return Axis(random_ranking(m, rng)); }

std::vector<CandidateId> random_sp_ranking(const Axis& axis, Rng& rng) {
  const int m = axis.size();
  int l = uniform(rng, 0, m - 1), r = l;
  std::vector<CandidateId> out{axis.at(l)};
  while (static_cast<int>(out.size()) < m) {
    bool go_left = r == m - 1 || (l > 0 && coin(rng));
    if (go_left) out.push_back(axis.at(--l));
    else out.push_back(axis.at(++r));
  }
  return out;
}

std::vector<CandidateId> random_sc_ranking(const Axis& axis, Rng& rng) {
  auto r = random_sp_ranking(axis, rng);
  std::reverse(r.begin(), r.end());
  return r;
}

std::vector<CandidateId> random_dodgson_ranking(const Axis& axis, int k, Rng& rng) {
  auto r = random_sp_ranking(axis, rng);
  const int swaps = uniform(rng, 0, k);
  for (int i = 0; i < swaps && r.size() > 1; ++i) {
    int j = uniform(rng, 0, static_cast<int>(r.size()) - 2);
    std::swap(r[j], r[j + 1]);
  }
  return r;
}

std::vector<CandidateId> random_perception_ranking(const Axis& axis, int k, Rng& rng) {
  auto order = axis.order();
  const int swaps = uniform(rng, 0, k);
  for (int i = 0; i < swaps && order.size() > 1; ++i) {
    int j = uniform(rng, 0, static_cast<int>(order.size()) - 2);
    std::swap(order[j], order[j + 1]);
  }
  return random_sp_ranking(Axis(order), rng);
}

CandSet random_set(int m, Rng& rng) {
  return static_cast<CandSet>(std::uniform_int_distribution<std::uint64_t>(0, full_set(m))(rng));
}

CandSet random_interval(const Axis& axis, Rng& rng, bool allow_empty) {
  if (allow_empty && coin(rng, 0.1)) return 0;
  int a = uniform(rng, 0, axis.size() - 1), b = uniform(rng, 0, axis.size() - 1);
  if (a > b) std::swap(a, b);
  CandSet s = 0;
  for (int i = a; i <= b; ++i) s |= bit(axis.at(i));
  return s;
}

CandSet random_non_interval(const Axis& axis, Rng& rng) {
  while (true) {
    CandSet s = random_set(axis.size(), rng);
    if (!is_interval(s, axis)) return s;
  }
}

AttackInstance blank(AttackKind kind, int m, BallotKind ballots, const VotingSystem& sys, Rng& rng) {
  AttackInstance inst;
  inst.kind = kind;
  inst.election.candidates = names(m);
  inst.election.votes.kind = ballots;
  inst.pool.kind = ballots;
  inst.system = sys;
  inst.axis = random_axis(m, rng);
  inst.preferred = uniform(rng, 0, m - 1);
  return inst;
}

}  // namespace nearsp::testing
