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
#include <limits>
#include <map>
#include <unordered_map>

#include "nearsp/control.hpp"
#include "nearsp/error.hpp"
#include "nearsp/structure.hpp"
#include "nearsp/subsets.hpp"

namespace nearsp {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Selection of a subset X of `must | optional` along the axis such that
// every member of X scores at most t among X. Choosing an optional member
// costs add_cost, leaving one out costs skip_cost. Scores are read off the
// k-radius neighborhoods, so the answer is exact for k-local elections.
struct WindowDp {
  WindowDp(const Axis& ax, std::span<const LinearVote> votes, int radius, std::int64_t bound)
      : axis(ax), V(votes), k(radius), t(bound) {}

  const Axis& axis;
  std::span<const LinearVote> V;
  int k;
  std::int64_t t;
  std::int64_t add_cost = 1;
  std::int64_t skip_cost = 0;

  std::unordered_map<CandSet, std::vector<std::int64_t>> cache;

  std::int64_t score(CandidateId c, CandSet active) {
    auto it = cache.find(active);
    if (it == cache.end()) it = cache.emplace(active, plurality_scores(V, axis.size(), active)).first;
    return it->second[c];
  }

  struct Entry {
    std::int64_t cost = kInf;
    CandSet chosen = 0;
  };

  // Returns the cheapest cost and the chosen optional members.
  std::optional<std::pair<std::int64_t, CandSet>> run(CandSet must, CandSet optional) {
    optional &= ~must;
    std::vector<CandidateId> U;
    for (CandidateId c : axis.order())
      if (contains(must | optional, c)) U.push_back(c);
    const int n = static_cast<int>(U.size());
    std::vector<int> next_must(n + 1, n);
    for (int i = n - 1; i >= 0; --i) next_must[i] = contains(must, U[i]) ? i : next_must[i + 1];
    auto skipped = [&](int from, int to) {  // optional members strictly inside (from, to)
      std::int64_t c = 0;
      for (int i = from + 1; i < to; ++i)
        if (contains(optional, U[i])) c += skip_cost;
      return c;
    };
    auto mask_of = [&](const std::vector<int>& seq, int lo) {
      CandSet s = 0;
      for (int i = lo; i < static_cast<int>(seq.size()); ++i) s |= bit(U[seq[i]]);
      return s;
    };

    std::pair<std::int64_t, CandSet> best{kInf, 0};
    if (next_must[0] == n) best = {skipped(-1, n), 0};

    std::vector<std::map<std::vector<int>, Entry>> bucket(n);
    auto relax = [&](std::vector<int> seq, std::int64_t cost, CandSet chosen) {
      // seq already has the new element appended; check the one whose
      // neighborhood just closed.
      const int len = static_cast<int>(seq.size());
      const int idx = len == 2 * k + 1 ? k : len - k - 1;
      if (idx >= 0 && score(U[seq[idx]], mask_of(seq, 0)) > t) return;
      if (len == 2 * k + 1) seq.erase(seq.begin());
      auto& e = bucket[seq.back()][seq];
      if (cost < e.cost) e = {cost, chosen};
    };
    for (int j = 0; j <= std::min(next_must[0], n - 1); ++j) {
      bool opt = contains(optional, U[j]);
      relax({j}, skipped(-1, j) + (opt ? add_cost : 0), opt ? bit(U[j]) : 0);
    }
    for (int a = 0; a < n; ++a) {
      for (const auto& [seq, e] : bucket[a]) {
        const int stop = std::min(next_must[a + 1], n - 1);
        for (int b = a + 1; b <= stop; ++b) {
          bool opt = contains(optional, U[b]);
          std::vector<int> nseq = seq;
          nseq.push_back(b);
          relax(std::move(nseq), e.cost + skipped(a, b) + (opt ? add_cost : 0), e.chosen | (opt ? bit(U[b]) : 0));
        }
        if (next_must[a + 1] != n) continue;
        const int L = static_cast<int>(seq.size());
        bool ok = true;
        for (int i = std::max(0, L - k); i < L && ok; ++i)
          ok = score(U[seq[i]], mask_of(seq, std::max(0, i - k))) <= t;
        std::int64_t cost = e.cost + skipped(a, n);
        if (ok && cost < best.first) best = {cost, e.chosen};
      }
      bucket[a].clear();
    }
    if (best.first >= kInf) return std::nullopt;
    return best;
  }
};

void walk(const Axis& axis, CandSet C_ref, CandSet A, int from, int step, int left, CandSet acc,
          std::vector<CandSet>& out) {
  int i = from;
  while (i >= 0 && i < axis.size() && !contains(C_ref | A, axis.at(i))) i += step;
  if (left == 0 || i < 0 || i >= axis.size()) {
    out.push_back(acc);
    return;
  }
  CandidateId c = axis.at(i);
  walk(axis, C_ref, A, i + step, step, left - 1, acc | bit(c), out);
  if (!contains(C_ref, c)) walk(axis, C_ref, A, i + step, step, left, acc, out);
}

std::vector<CandSet> sides(const Axis& axis, CandSet C_ref, CandSet A, CandidateId d, int k, int step) {
  std::vector<CandSet> out;
  walk(axis, C_ref & ~bit(d), A & ~C_ref & ~bit(d), axis.pos(d) + step, step, k, 0, out);
  return out;
}

}  // namespace

std::vector<CandSet> neighborhood_family(CandSet C_ref, CandSet A, CandidateId d, int k, const Axis& axis) {
  std::vector<CandSet> out;
  for (CandSet l : sides(axis, C_ref, A, d, k, -1))
    for (CandSet r : sides(axis, C_ref, A, d, k, +1)) out.push_back(l | r | bit(d));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

KLocalResult klocal_min_additions(CandSet C, CandSet A, std::span<const LinearVote> V, const Axis& axis, int k,
                                  std::int64_t t) {
  if (k < 1) throw PreconditionError("locality radius must be at least 1");
  WindowDp dp{axis, V, k, t};
  auto r = dp.run(C, A);
  if (!r) return {};
  return {static_cast<int>(r->first), r->second};
}

AttackOutcome ccac_plurality_klocal(CandSet C, CandSet A, std::span<const LinearVote> V, CandidateId p,
                                    std::int64_t K, const Axis& axis, int k) {
  if (k < 1) throw PreconditionError("locality radius must be at least 1");
  if (!contains(C, p)) throw PreconditionError("p must be registered");
  A &= ~C;
  WindowDp dp{axis, V, k, 0};
  for (CandSet D : neighborhood_family(C, A, p, k, axis)) {
    const CandSet forced = D & A;
    if (set_size(forced) > K) continue;
    int lo = axis.size(), hi = -1, nl = 0, nr = 0;
    for (CandidateId c : members(D)) {
      lo = std::min(lo, axis.pos(c));
      hi = std::max(hi, axis.pos(c));
      if (axis.pos(c) < axis.pos(p)) ++nl;
      if (axis.pos(c) > axis.pos(p)) ++nr;
    }
    // p's neighborhood must come out as exactly D.
    CandSet optional = 0;
    for (CandidateId c : members(A & ~D)) {
      const int q = axis.pos(c);
      if (q > lo && q < hi) continue;
      if (q < lo && nl < k) continue;
      if (q > hi && nr < k) continue;
      optional |= bit(c);
    }
    dp.t = plurality_scores(V, axis.size(), D)[p];
    auto r = dp.run(C | forced, optional);
    if (!r || r->first + set_size(forced) > K) continue;
    Witness w;
    w.added_candidates = members(forced | r->second);
    return AttackOutcome::accept(std::move(w));
  }
  return AttackOutcome::no();
}

AttackOutcome ccdc_plurality_klocal(CandSet C, std::span<const LinearVote> V, CandidateId p, std::int64_t K,
                                    const Axis& axis, int k, CandSet F) {
  if (k < 1) throw PreconditionError("locality radius must be at least 1");
  if (!contains(C, p)) throw PreconditionError("p must be registered");
  F |= bit(p);
  std::vector<CandidateId> left, right;  // nearest first
  for (int i = axis.pos(p) - 1; i >= 0; --i)
    if (contains(C, axis.at(i))) left.push_back(axis.at(i));
  for (int i = axis.pos(p) + 1; i < axis.size(); ++i)
    if (contains(C, axis.at(i))) right.push_back(axis.at(i));

  // The j nearest survivors on one side. With j < k nothing else on that
  // side survives; with j = k only candidates closer than the farthest
  // pick are deleted.
  auto picks = [&](const std::vector<CandidateId>& side, std::vector<std::pair<CandSet, CandSet>>& out) {
    const int n = static_cast<int>(side.size());
    for (int j = 0; j <= std::min(k, n); ++j) {
      for_each_subset(n, j, [&](const std::vector<int>& idx) {
        if (static_cast<int>(idx.size()) != j) return false;
        CandSet keep = 0, gone = 0;
        for (int i : idx) keep |= bit(side[i]);
        const int upto = j < k ? n : (idx.empty() ? 0 : idx.back());
        for (int i = 0; i < upto; ++i)
          if (!contains(keep, side[i])) gone |= bit(side[i]);
        out.push_back({keep, gone});
        return false;
      });
    }
  };
  std::vector<std::pair<CandSet, CandSet>> Ls, Rs;
  picks(left, Ls);
  picks(right, Rs);

  for (const auto& [lk, lg] : Ls) {
    for (const auto& [rk, rg] : Rs) {
      CandSet D = lg | rg;
      if (D & F) continue;
      const CandSet fixed = lk | rk | bit(p);
      bool dropped = false;
      while (set_size(D) <= K) {
        auto s = plurality_scores(V, axis.size(), C & ~D);
        CandidateId worst = -1;
        for (CandidateId c : members(C & ~D))
          if (s[c] > s[p]) {
            worst = c;
            break;
          }
        if (worst < 0) break;
        if (contains(F | fixed, worst)) {
          dropped = true;
          break;
        }
        D |= bit(worst);
      }
      if (dropped || set_size(D) > K) continue;
      Witness w;
      w.deleted_candidates = members(D);
      return AttackOutcome::accept(std::move(w));
    }
  }
  return AttackOutcome::no();
}

}  // namespace nearsp
