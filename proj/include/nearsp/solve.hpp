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
#include <string>

#include "nearsp/model.hpp"
#include "nearsp/oracle.hpp"

namespace nearsp {

struct SolveOptions {
  OracleCaps caps{};
  std::uint64_t enum_cap = std::uint64_t{1} << 20;
  // When a fast solver rejects the instance, answer with the oracle instead
  // of failing.
  bool fallback = true;
};

struct SolveResult {
  AttackOutcome outcome;
  std::string route;  // solver name, or "oracle(<reason>)"
};

// Locality radius a society guarantees for plurality candidate control:
// SP -> 1, Dodgson(k) and PerceptionFlip(k) -> k + 1. Zero if none.
int locality_radius(const Society& s);

// Routes an instance to the matching polynomial-time solver, or to the
// oracle when no solver covers its cell.
SolveResult solve(const AttackInstance& inst, const SolveOptions& opts = {});

}  // namespace nearsp
