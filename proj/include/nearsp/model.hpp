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

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nearsp {

using CandidateId = int;
// Candidate subsets are bitmasks over ids, so an election has at most 64 candidates.
using CandSet = std::uint64_t;
inline constexpr int kMaxCandidates = 64;

inline constexpr CandSet bit(CandidateId c) { return CandSet{1} << c; }
inline constexpr CandSet full_set(int m) {
  return m >= 64 ? ~CandSet{0} : (CandSet{1} << m) - 1;
}
inline constexpr bool contains(CandSet s, CandidateId c) { return (s >> c) & 1U; }
inline int set_size(CandSet s) { return std::popcount(s); }
std::vector<CandidateId> members(CandSet s);
CandSet to_set(std::span<const CandidateId> ids);

enum class Flag : std::uint8_t { MaverickEnabled = 1, Deletable = 2, OpenToBribe = 4 };

struct Flags {
  std::uint8_t bits = 0;
  bool has(Flag f) const { return bits & static_cast<std::uint8_t>(f); }
  Flags& set(Flag f) {
    bits |= static_cast<std::uint8_t>(f);
    return *this;
  }
  bool operator==(const Flags&) const = default;
};

// A vote with no flags record behaves as deletable, open to bribes and not
// maverick-enabled. An explicit (possibly empty) record overrides all three.
struct LinearVote {
  std::vector<CandidateId> ranking;
  std::int64_t weight = 1;
  std::optional<Flags> flags;
  bool operator==(const LinearVote&) const = default;
};

struct ApprovalVote {
  CandSet approved = 0;
  std::int64_t weight = 1;
  std::optional<Flags> flags;
  bool operator==(const ApprovalVote&) const = default;
};

template <class V>
bool is_deletable(const V& v) {
  return !v.flags || v.flags->has(Flag::Deletable);
}
template <class V>
bool is_open_to_bribe(const V& v) {
  return !v.flags || v.flags->has(Flag::OpenToBribe);
}
template <class V>
bool is_maverick_enabled(const V& v) {
  return v.flags && v.flags->has(Flag::MaverickEnabled);
}

enum class BallotKind { Orders, Approval };

// Ballots of one kind. Only the vector matching `kind` is populated.
struct Profile {
  BallotKind kind = BallotKind::Orders;
  std::vector<LinearVote> orders;
  std::vector<ApprovalVote> approvals;

  std::size_t size() const {
    return kind == BallotKind::Orders ? orders.size() : approvals.size();
  }
  bool empty() const { return size() == 0; }
  bool operator==(const Profile&) const = default;
};

struct Election {
  std::vector<std::string> candidates;
  Profile votes;

  int m() const { return static_cast<int>(candidates.size()); }
  bool operator==(const Election&) const = default;
};

// Societal axis. order[i] is the candidate at axis position i.
class Axis {
 public:
  Axis() = default;
  explicit Axis(std::vector<CandidateId> order);

  const std::vector<CandidateId>& order() const { return order_; }
  int size() const { return static_cast<int>(order_.size()); }
  int pos(CandidateId c) const { return pos_[c]; }
  CandidateId at(int i) const { return order_[i]; }
  bool operator==(const Axis& o) const { return order_ == o.order_; }

 private:
  std::vector<CandidateId> order_;
  std::vector<int> pos_;
};

enum class SystemKind { Plurality, Veto, Borda, Approval, Condorcet, Scoring };

struct VotingSystem {
  SystemKind kind = SystemKind::Plurality;
  std::vector<std::int64_t> alphas;  // Scoring only

  static VotingSystem plurality() { return {SystemKind::Plurality, {}}; }
  static VotingSystem veto() { return {SystemKind::Veto, {}}; }
  static VotingSystem borda() { return {SystemKind::Borda, {}}; }
  static VotingSystem approval() { return {SystemKind::Approval, {}}; }
  static VotingSystem condorcet() { return {SystemKind::Condorcet, {}}; }
  static VotingSystem scoring(std::vector<std::int64_t> a) {
    return {SystemKind::Scoring, std::move(a)};
  }

  bool is_positional() const {
    return kind == SystemKind::Plurality || kind == SystemKind::Veto ||
           kind == SystemKind::Borda || kind == SystemKind::Scoring;
  }
  // Score vector for m candidates; positional systems only.
  std::vector<std::int64_t> score_vector(int m) const;
  bool operator==(const VotingSystem&) const = default;
};

enum class SocietyKind { None, SinglePeaked, SingleCaved, Maverick, Swoon, Dodgson, PerceptionFlip };

struct Society {
  SocietyKind kind = SocietyKind::None;
  int k = 0;   // maverick bound, swoon top count, swap count
  int k2 = 0;  // swoon bottom count

  static Society none() { return {}; }
  static Society sp() { return {SocietyKind::SinglePeaked, 0, 0}; }
  static Society single_caved() { return {SocietyKind::SingleCaved, 0, 0}; }
  static Society maverick(int k) { return {SocietyKind::Maverick, k, 0}; }
  static Society swoon(int k, int k2) { return {SocietyKind::Swoon, k, k2}; }
  static Society dodgson(int k) { return {SocietyKind::Dodgson, k, 0}; }
  static Society perception_flip(int k) { return {SocietyKind::PerceptionFlip, k, 0}; }
  bool operator==(const Society&) const = default;
};

enum class AttackKind { Ccwm, Ccav, Ccdv, Ccac, Ccdc, Bribery };
enum class BriberyModel { Standard, Marked };
enum class BriberyVariant { Plain, Negative, StrongNegative };

// One attack problem. For CCAC `election` ranges over C and the spoilers A,
// with `spoilers` marking A. For CCWM `election.votes` holds the
// nonmanipulators.
struct AttackInstance {
  AttackKind kind = AttackKind::Ccwm;
  Election election;
  VotingSystem system;
  CandidateId preferred = 0;
  std::int64_t budget = 0;
  Society society;
  std::optional<Axis> axis;
  CandSet spoilers = 0;
  CandSet protected_set = 0;  // CCDC; p is always protected
  std::vector<std::int64_t> manipulators;
  Profile pool;
  BriberyModel bribery_model = BriberyModel::Standard;
  BriberyVariant bribery_variant = BriberyVariant::Plain;

  int m() const { return election.m(); }
  CandSet registered() const { return full_set(m()) & ~spoilers; }
  bool operator==(const AttackInstance&) const = default;
};

struct Witness {
  std::vector<std::vector<CandidateId>> manipulator_votes;
  std::vector<int> added_voters;    // pool indices
  std::vector<int> deleted_voters;  // voter indices
  std::vector<CandidateId> added_candidates;
  std::vector<CandidateId> deleted_candidates;
  std::vector<std::pair<int, CandSet>> bribes;  // voter index, new approval set
  bool operator==(const Witness&) const = default;
};

struct AttackOutcome {
  bool yes = false;
  std::optional<Witness> witness;

  static AttackOutcome no() { return {}; }
  static AttackOutcome accept(Witness w) { return {true, std::move(w)}; }
  bool operator==(const AttackOutcome&) const = default;
};

// Winner determination. All functions use the co-winner model and multiply
// weights in. `active` restricts the election to a candidate subset.
std::vector<CandidateId> evaluate_winners(const Election& e, const VotingSystem& sys);
CandSet winners_among(const Profile& votes, const VotingSystem& sys, int m, CandSet active);
bool is_winner(const Profile& votes, const VotingSystem& sys, int m, CandSet active, CandidateId p);

// First candidate of `ranking` inside `active`, or -1.
CandidateId top_among(std::span<const CandidateId> ranking, CandSet active);
std::vector<std::int64_t> plurality_scores(std::span<const LinearVote> votes, int m, CandSet active);
std::vector<std::int64_t> approval_scores(std::span<const ApprovalVote> votes, int m);
// Weighted pairwise margins: n[a*m+b] = weight preferring a to b.
std::vector<std::int64_t> pairwise_counts(std::span<const LinearVote> votes, int m);
std::optional<CandidateId> condorcet_winner(std::span<const LinearVote> votes, int m, CandSet active);

// Candidate id by name, or -1.
CandidateId find_candidate(const Election& e, const std::string& name);

std::string to_string(SystemKind k);
std::string to_string(SocietyKind k);
std::string to_string(AttackKind k);
std::string to_string(BriberyModel k);
std::string to_string(BriberyVariant k);

}  // namespace nearsp
