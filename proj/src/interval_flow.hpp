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

// 0/1 selection of intervals over a line of points subject to per-point
// coverage rows, minimizing total item cost.
//
// The constraint matrix has consecutive ones in every column, so taking
// differences of neighboring rows turns it into a network: item [a,b]
// becomes an arc a -> b+1, and row slacks become arcs between neighbors.
// A min-cost flow then gives an integral optimum.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace nearsp::detail {

struct IntervalItem {
  int lo = 0;  // first covered point, 0-based
  int hi = 0;  // last covered point
  std::int64_t cost = 0;
};

enum class RowSense { Free, AtLeast, AtMost, Exactly };

struct CoverRow {
  RowSense sense = RowSense::Free;
  std::int64_t rhs = 0;
};

struct CoverSolution {
  std::int64_t cost = 0;
  std::vector<int> chosen;  // item indices, ascending
};

// Empty when no selection satisfies every row.
std::optional<CoverSolution> solve_interval_cover(const std::vector<CoverRow>& rows,
                                                  const std::vector<IntervalItem>& items);

}  // namespace nearsp::detail
