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

#include <string>

#include "nearsp/io.hpp"
#include "nearsp/model.hpp"

namespace nearsp::test {

inline AttackInstance load(const std::string& text) {
  auto inst = parse_instance(text);
  validate_instance(inst);
  return inst;
}

inline std::vector<CandidateId> order(const AttackInstance& inst, const std::string& text) {
  return parse_instance(emit_instance(inst) + "voter: " + text + "\n").election.votes.orders.back().ranking;
}

}  // namespace nearsp::test
