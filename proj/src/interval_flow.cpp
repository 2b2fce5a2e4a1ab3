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

#include "interval_flow.hpp"

#include <deque>
#include <limits>

namespace nearsp::detail {
namespace {

class MinCostFlow {
 public:
  explicit MinCostFlow(int n) : adj_(n) {}

  int add_arc(int from, int to, std::int64_t cap, std::int64_t cost) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap, cost});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, -cost});
    return static_cast<int>(arcs_.size()) - 2;
  }

  // Successive shortest paths with Bellman-Ford queues.
  std::pair<std::int64_t, std::int64_t> run(int s, int t) {
    const std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::int64_t flow = 0, cost = 0;
    const int n = static_cast<int>(adj_.size());
    while (true) {
      std::vector<std::int64_t> dist(n, kInf);
      std::vector<int> via(n, -1);
      std::vector<bool> queued(n, false);
      std::deque<int> q{s};
      dist[s] = 0;
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        queued[u] = false;
        for (int id : adj_[u]) {
          const Arc& a = arcs_[id];
          if (a.cap > 0 && dist[u] + a.cost < dist[a.to]) {
            dist[a.to] = dist[u] + a.cost;
            via[a.to] = id;
            if (!queued[a.to]) queued[a.to] = true, q.push_back(a.to);
          }
        }
      }
      if (dist[t] == kInf) break;
      std::int64_t push = kInf;
      for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) push = std::min(push, arcs_[via[v]].cap);
      for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= push;
        arcs_[via[v] ^ 1].cap += push;
      }
      flow += push;
      cost += push * dist[t];
    }
    return {flow, cost};
  }

  std::int64_t residual(int arc) const { return arcs_[arc].cap; }

 private:
  struct Arc {
    int to;
    std::int64_t cap;
    std::int64_t cost;
  };
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::optional<CoverSolution> solve_interval_cover(const std::vector<CoverRow>& rows,
                                                  const std::vector<IntervalItem>& items) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::int64_t> rhs(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (rows[i].sense == RowSense::AtLeast) rhs[i] = std::max<std::int64_t>(0, rows[i].rhs);
    else if (rows[i].sense != RowSense::Free) rhs[i] = rows[i].rhs;
    if (rhs[i] < 0) return std::nullopt;
  }
  std::int64_t big = static_cast<std::int64_t>(items.size()) + 1;
  for (auto r : rhs) big += r;

  // Nodes 0..n are row differences; n+1 is the source, n+2 the sink.
  const int src = n + 1, snk = n + 2;
  MinCostFlow g(n + 3);
  std::vector<int> item_arc(items.size());
  for (std::size_t j = 0; j < items.size(); ++j) item_arc[j] = g.add_arc(items[j].lo, items[j].hi + 1, 1, items[j].cost);
  for (int i = 0; i < n; ++i) {
    RowSense s = rows[i].sense;
    if (s == RowSense::AtLeast || s == RowSense::Free) g.add_arc(i + 1, i, big, 0);
    if (s == RowSense::AtMost || s == RowSense::Free) g.add_arc(i, i + 1, big, 0);
  }
  std::int64_t demand = 0;
  for (int i = 0; i <= n; ++i) {
    std::int64_t b = rhs[i] - (i > 0 ? rhs[i - 1] : 0);
    if (b > 0) g.add_arc(src, i, b, 0), demand += b;
    if (b < 0) g.add_arc(i, snk, -b, 0);
  }
  auto [flow, cost] = g.run(src, snk);
  if (flow != demand) return std::nullopt;
  CoverSolution sol;
  sol.cost = cost;
  for (std::size_t j = 0; j < items.size(); ++j)
    if (g.residual(item_arc[j]) == 0) sol.chosen.push_back(static_cast<int>(j));
  return sol;
}

}  // namespace nearsp::detail
