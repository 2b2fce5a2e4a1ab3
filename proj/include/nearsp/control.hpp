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
#include <optional>
#include <span>
#include <vector>

#include "nearsp/model.hpp"

namespace nearsp {

struct ControlOptions {
  // Upper bound on enumerated maverick subsets or B vectors.
  std::uint64_t enum_cap = std::uint64_t{1} << 20;
};

// ---- approval voter control ----

// Replaces every maverick ballot by one singleton ballot per approved
// candidate, each with the original weight and flags.
std::vector<ApprovalVote> demaverickify_approval(std::span<const ApprovalVote> votes, const Axis& axis);

// Adding voters from pool W (all axis intervals). Only voters approving p
// are worth adding, and adding more of them never hurts, so the question is
// which min(K, |W_p|) to take; that is an interval selection with per-point
// caps. Pool voters approving p must have weight 1. Witness indices refer
// to W.
AttackOutcome sp_approval_ccav(int m, std::span<const ApprovalVote> V, std::span<const ApprovalVote> W,
                               CandidateId p, std::int64_t K, const Axis& axis);

// Deleting at most K deletable voters. Deletable voters must be axis
// intervals; those that do not approve p must have weight 1. Only they are
// ever deleted, as a min-size multicover of the rivals' surpluses.
AttackOutcome sp_approval_ccdv_flagged(int m, std::span<const ApprovalVote> V, CandidateId p, std::int64_t K,
                                       const Axis& axis);

// CCAV/CCDV with approval voting and a bounded number of mavericks, by
// enumerating which mavericks to add or delete.
AttackOutcome maverick_control_approval(const AttackInstance& inst, int maverick_bound, bool count_pool_only = true,
                                        const ControlOptions& opts = {});

// ---- Condorcet voter control ----

struct CondorcetPartition {
  std::vector<int> left, right, top, maverick;  // W_l, W_r, W_p, W_m
};
// Splits voters by where their top sits relative to p. left/right are
// sorted by the number of candidates ranked above p, ascending or
// descending.
CondorcetPartition partition_condorcet(std::span<const LinearVote> votes, const Axis& axis, CandidateId p,
                                       bool ascending);

AttackOutcome maverick_control_condorcet(const AttackInstance& inst, int maverick_bound,
                                         const ControlOptions& opts = {});

// ---- plurality candidate control over k-local elections ----
//
// Candidate masks index a universe laid out by `axis`; candidates outside
// C ∪ A take no part.

// S(d): every N(axis, C_ref ∪ A', d, k) over A' ⊆ A with d ∈ C_ref ∪ A',
// deduplicated, in a fixed order.
std::vector<CandSet> neighborhood_family(CandSet C_ref, CandSet A, CandidateId d, int k, const Axis& axis);

struct KLocalResult {
  std::optional<int> additions;  // empty: infeasible
  CandSet added = 0;
};
// Fewest spoilers A' ⊆ A to add so that every candidate of C ∪ A' scores at
// most t. Sweeps the axis keeping the last 2k chosen candidates; once a
// candidate has k chosen neighbors on each side its score is final.
KLocalResult klocal_min_additions(CandSet C, CandSet A, std::span<const LinearVote> V, const Axis& axis, int k,
                                  std::int64_t t);

AttackOutcome ccac_plurality_klocal(CandSet C, CandSet A, std::span<const LinearVote> V, CandidateId p,
                                    std::int64_t K, const Axis& axis, int k);
// F lists protected candidates; p is always protected.
AttackOutcome ccdc_plurality_klocal(CandSet C, std::span<const LinearVote> V, CandidateId p, std::int64_t K,
                                    const Axis& axis, int k, CandSet F);

// Plurality CCAC/CCDC with at most k mavericks, by guessing each
// maverick's final top.
AttackOutcome kmaverick_control_plurality(const AttackInstance& inst, int k, const ControlOptions& opts = {});

// Plurality CCAC/CCDC with single-caved voters.
AttackOutcome singlecaved_control_plurality(const AttackInstance& inst);

}  // namespace nearsp
