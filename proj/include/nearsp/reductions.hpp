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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nearsp/model.hpp"
#include "nearsp/oracle.hpp"

namespace nearsp {

struct PartitionInstance {
  std::vector<std::int64_t> values;  // distinct, positive, even sum

  std::int64_t half() const;
};

struct X3CInstance {
  int base = 0;                           // 3k elements, 0-based
  std::vector<std::array<int, 3>> sets;

  int k() const { return base / 3; }
};

void validate(const PartitionInstance& p);
void validate(const X3CInstance& x);

// Direct solvers for the source problems. Return the chosen value indices
// or set indices of one solution.
std::optional<std::vector<int>> solve_partition(const PartitionInstance& p);
std::optional<std::vector<int>> solve_x3c(const X3CInstance& x);

PartitionInstance parse_partition(std::string_view text);
X3CInstance parse_x3c(std::string_view text);
std::string emit_partition(const PartitionInstance& p);
std::string emit_x3c(const X3CInstance& x);

enum class PartitionKind { Scoring1Mav, VetoKMav, VetoSwoon4, VetoDodgson4, SingleCaved };
struct PartitionParams {
  std::vector<std::int64_t> alphas{2, 1, 0};  // Scoring1Mav, SingleCaved
  int m = 3;                                   // VetoKMav
  int k = 1;                                   // VetoKMav maverick bound
};
std::string to_string(PartitionKind k);
PartitionKind parse_partition_kind(std::string_view s);

AttackInstance partition_to_ccwm(PartitionKind kind, const PartitionInstance& src, const PartitionParams& params = {});

enum class X3CKind { CcacSwoon, CcdcSwoon, CcacDodgsonM2, CcdcDodgsonM2, CcacPerceptionM2, CcdcPerceptionM2 };
std::string to_string(X3CKind k);
X3CKind parse_x3c_kind(std::string_view s);
bool is_ccac(X3CKind k);

// Adds disjoint fresh triples (each forced into any cover) until k >= min_k
// and n >= min_n. The answer is unchanged.
X3CInstance pad_x3c(const X3CInstance& x, int min_k, int min_n);

// Builds the candidate-control gadget. With pad, sources that are too
// small for the gadget are padded first; without it they are rejected.
AttackInstance x3c_to_control(X3CKind kind, const X3CInstance& src, bool pad = true);

// Appends t blocks of single-peaked padding voters to a swoon gadget.
AttackInstance pad_for_epsilon(const AttackInstance& inst, int t);

enum class TopTwoSociety { DodgsonM2, PerceptionM2 };
// A vote ranking ci then cj that is within m-2 of the axis under the
// society's distance; ranks the axis-first candidate last on request.
LinearVote complete_top_two(CandidateId ci, CandidateId cj, const Axis& axis, TopTwoSociety society,
                            bool rank_first_last);

struct ReductionReport {
  bool source_yes = false;
  bool reduced_yes = false;
  bool society_ok = false;
  std::string note;

  bool agree() const { return source_yes == reduced_yes; }
};

ReductionReport verify_reduction(const PartitionInstance& src, const AttackInstance& reduced,
                                 const OracleCaps& caps = OracleCaps::relaxed());
ReductionReport verify_reduction(const X3CInstance& src, const AttackInstance& reduced,
                                 const OracleCaps& caps = OracleCaps::relaxed());

// Whether every vote of the instance fits its society tag.
bool society_holds(const AttackInstance& inst);

}  // namespace nearsp
