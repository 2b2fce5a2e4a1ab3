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

#pragma once

#include <cstdint>
#include <vector>

namespace nearsp {

// Number of subsets of an n-set with at most max_size elements, saturating
// at UINT64_MAX.
std::uint64_t count_subsets(int n, std::int64_t max_size);

// Visits index subsets of {0..n-1} with at most max_size elements, smaller
// subsets first and lexicographically within a size. Stops as soon as fn
// returns true; the return value says whether it stopped.
template <class F>
bool for_each_subset(int n, std::int64_t max_size, F&& fn) {
  std::vector<int> idx;
  const int top = static_cast<int>(max_size < n ? max_size : n);
  for (int s = 0; s <= top; ++s) {
    idx.resize(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      if (fn(static_cast<const std::vector<int>&>(idx))) return true;
      int i = s - 1;
      while (i >= 0 && idx[i] == n - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace nearsp
