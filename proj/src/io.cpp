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

#include "nearsp/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "nearsp/error.hpp"

namespace nearsp {
namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::int64_t parse_int(std::string_view s, int line, const char* what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(line, std::string("expected integer for ") + what + ", got '" + std::string(s) + "'");
  return v;
}

bool valid_name(const std::string& n) {
  if (n.empty()) return false;
  return n.find_first_of("{}>,:#=") == std::string::npos;
}

struct RawLine {
  int line;
  std::string key;
  std::string attrs;
  std::string value;
};

Flags parse_flags(std::string_view csv, int line) {
  Flags f;
  if (trim(csv).empty()) return f;
  for (auto tok : split_on(csv, ',')) {
    if (tok == "maverick-enabled") f.set(Flag::MaverickEnabled);
    else if (tok == "deletable") f.set(Flag::Deletable);
    else if (tok == "open-to-bribe") f.set(Flag::OpenToBribe);
    else throw ParseError(line, "unknown flag '" + std::string(tok) + "'");
  }
  return f;
}

std::string flags_text(const Flags& f) {
  std::vector<std::string> names;
  if (f.has(Flag::MaverickEnabled)) names.push_back("maverick-enabled");
  if (f.has(Flag::Deletable)) names.push_back("deletable");
  if (f.has(Flag::OpenToBribe)) names.push_back("open-to-bribe");
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out;
}

struct VoteAttrs {
  std::int64_t weight = 1;
  std::optional<Flags> flags;
};

VoteAttrs parse_attrs(const std::string& attrs, int line) {
  VoteAttrs a;
  bool seen_w = false;
  for (const auto& tok : split_ws(attrs)) {
    if (tok.rfind("w=", 0) == 0) {
      if (seen_w) throw ParseError(line, "duplicate w=");
      seen_w = true;
      a.weight = parse_int(std::string_view(tok).substr(2), line, "weight");
      if (a.weight < 1) throw ParseError(line, "weight must be positive");
    } else if (tok.rfind("flags=", 0) == 0) {
      if (a.flags) throw ParseError(line, "duplicate flags=");
      a.flags = parse_flags(std::string_view(tok).substr(6), line);
    } else {
      throw ParseError(line, "unknown voter attribute '" + tok + "'");
    }
  }
  return a;
}

class NameTable {
 public:
  explicit NameTable(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) ids_[names[i]] = static_cast<int>(i);
  }
  CandidateId get(std::string_view n, int line) const {
    auto it = ids_.find(std::string(n));
    if (it == ids_.end()) throw ParseError(line, "unknown candidate '" + std::string(n) + "'");
    return it->second;
  }

 private:
  std::map<std::string, int> ids_;
};

LinearVote parse_order(const std::string& body, const NameTable& names, int m, int line) {
  LinearVote v;
  std::vector<bool> seen(m, false);
  for (auto tok : split_on(body, '>')) {
    CandidateId c = names.get(tok, line);
    if (seen[c]) throw ParseError(line, "candidate '" + std::string(tok) + "' listed twice");
    seen[c] = true;
    v.ranking.push_back(c);
  }
  if (static_cast<int>(v.ranking.size()) != m) throw ParseError(line, "vote does not rank every candidate");
  return v;
}

ApprovalVote parse_approval(const std::string& body, const NameTable& names, int line) {
  std::string_view b = trim(body);
  if (b.size() < 2 || b.front() != '{' || b.back() != '}') throw ParseError(line, "approval ballot must be {..}");
  ApprovalVote v;
  std::string_view inner = trim(b.substr(1, b.size() - 2));
  if (inner.empty()) return v;
  for (auto tok : split_on(inner, ',')) {
    CandidateId c = names.get(tok, line);
    if (contains(v.approved, c)) throw ParseError(line, "candidate '" + std::string(tok) + "' listed twice");
    v.approved |= bit(c);
  }
  return v;
}

AttackKind parse_attack(const std::string& s, int line) {
  for (auto k : {AttackKind::Ccwm, AttackKind::Ccav, AttackKind::Ccdv, AttackKind::Ccac, AttackKind::Ccdc,
                 AttackKind::Bribery})
    if (to_string(k) == s) return k;
  throw ParseError(line, "unknown attack '" + s + "'");
}

VotingSystem parse_system(const std::vector<std::string>& toks, int line) {
  if (toks.empty()) throw ParseError(line, "missing system");
  const std::string& n = toks[0];
  auto only = [&](VotingSystem s) {
    if (toks.size() != 1) throw ParseError(line, "system '" + n + "' takes no arguments");
    return s;
  };
  if (n == "plurality") return only(VotingSystem::plurality());
  if (n == "veto") return only(VotingSystem::veto());
  if (n == "borda") return only(VotingSystem::borda());
  if (n == "approval") return only(VotingSystem::approval());
  if (n == "condorcet") return only(VotingSystem::condorcet());
  if (n == "scoring") {
    std::vector<std::int64_t> a;
    for (std::size_t i = 1; i < toks.size(); ++i) a.push_back(parse_int(toks[i], line, "scoring entry"));
    if (a.empty()) throw ParseError(line, "scoring needs a vector");
    return VotingSystem::scoring(std::move(a));
  }
  throw ParseError(line, "unknown system '" + n + "'");
}

Society parse_society(const std::vector<std::string>& toks, int line) {
  if (toks.empty()) throw ParseError(line, "missing society");
  const std::string& n = toks[0];
  auto arg = [&](std::size_t i) {
    auto v = parse_int(toks[i], line, "society parameter");
    if (v < 0) throw ParseError(line, "society parameter must be nonnegative");
    return static_cast<int>(v);
  };
  auto want = [&](std::size_t count) {
    if (toks.size() != count + 1) throw ParseError(line, "society '" + n + "' takes " + std::to_string(count) + " parameter(s)");
  };
  if (n == "none") return want(0), Society::none();
  if (n == "sp") return want(0), Society::sp();
  if (n == "single-caved") return want(0), Society::single_caved();
  if (n == "maverick") return want(1), Society::maverick(arg(1));
  if (n == "swoon") return want(2), Society::swoon(arg(1), arg(2));
  if (n == "dodgson") return want(1), Society::dodgson(arg(1));
  if (n == "perceptionflip") return want(1), Society::perception_flip(arg(1));
  throw ParseError(line, "unknown society '" + n + "'");
}

std::string society_text(const Society& s) {
  switch (s.kind) {
    case SocietyKind::Maverick:
    case SocietyKind::Dodgson:
    case SocietyKind::PerceptionFlip:
      return to_string(s.kind) + " " + std::to_string(s.k);
    case SocietyKind::Swoon:
      return "swoon " + std::to_string(s.k) + " " + std::to_string(s.k2);
    default:
      return to_string(s.kind);
  }
}

std::string system_text(const VotingSystem& s) {
  std::string out = to_string(s.kind);
  for (auto a : s.alphas) out += " " + std::to_string(a);
  return out;
}

}  // namespace

std::string format_ranking(const Election& e, std::span<const CandidateId> ranking) {
  std::string out;
  for (std::size_t i = 0; i < ranking.size(); ++i) out += (i ? " > " : "") + e.candidates[ranking[i]];
  return out;
}

std::string format_approval(const Election& e, CandSet s) {
  std::string out = "{";
  bool first = true;
  for (CandidateId c : members(s)) {
    out += (first ? "" : ", ") + e.candidates[c];
    first = false;
  }
  return out + "}";
}

void validate_instance(const AttackInstance& inst) {
  const int m = inst.m();
  if (m < 1) throw PreconditionError("empty candidate set");
  if (m > kMaxCandidates) throw PreconditionError("more than 64 candidates");
  for (int i = 0; i < m; ++i) {
    if (!valid_name(inst.election.candidates[i])) throw PreconditionError("invalid candidate name");
    for (int j = 0; j < i; ++j)
      if (inst.election.candidates[i] == inst.election.candidates[j])
        throw PreconditionError("duplicate candidate '" + inst.election.candidates[i] + "'");
  }
  if (inst.axis && inst.axis->size() != m) throw PreconditionError("axis does not cover the candidates");
  if (inst.society.kind != SocietyKind::None && !inst.axis) throw PreconditionError("society needs an axis");
  if (inst.society.kind == SocietyKind::Swoon && inst.society.k + inst.society.k2 >= m)
    throw PreconditionError("swoon parameters need k + k' < m");
  if (inst.preferred < 0 || inst.preferred >= m) throw PreconditionError("preferred candidate not in C");
  if (contains(inst.spoilers, inst.preferred)) throw PreconditionError("preferred candidate is a spoiler");
  if (inst.budget < 0) throw PreconditionError("negative budget");
  if ((inst.spoilers & ~full_set(m)) || (inst.protected_set & ~full_set(m)))
    throw PreconditionError("candidate set out of range");
  if (inst.spoilers && inst.kind != AttackKind::Ccac) throw PreconditionError("spoilers only apply to ccac");
  if (inst.protected_set && inst.kind != AttackKind::Ccdc) throw PreconditionError("protected only applies to ccdc");
  if (contains(inst.protected_set, inst.preferred)) throw PreconditionError("protected set stores p implicitly");
  if (!inst.manipulators.empty() && inst.kind != AttackKind::Ccwm)
    throw PreconditionError("manipulators only apply to ccwm");
  for (auto w : inst.manipulators)
    if (w < 1) throw PreconditionError("manipulator weight must be positive");
  if (!inst.pool.empty() && inst.kind != AttackKind::Ccav) throw PreconditionError("pool only applies to ccav");
  bool approval_sys = inst.system.kind == SystemKind::Approval;
  for (const Profile* p : {&inst.election.votes, &inst.pool}) {
    if (p->empty()) continue;
    if ((p->kind == BallotKind::Approval) != approval_sys) throw PreconditionError("voting system does not match ballot kind");
    for (const auto& v : p->orders) {
      if (v.weight < 1) throw PreconditionError("weight must be positive");
      if (static_cast<int>(v.ranking.size()) != m) throw PreconditionError("vote is not a permutation");
      CandSet seen = 0;
      for (CandidateId c : v.ranking) {
        if (c < 0 || c >= m || contains(seen, c)) throw PreconditionError("vote is not a permutation");
        seen |= bit(c);
      }
    }
    for (const auto& v : p->approvals) {
      if (v.weight < 1) throw PreconditionError("weight must be positive");
      if (v.approved & ~full_set(m)) throw PreconditionError("approval set out of range");
    }
  }
  if (inst.election.votes.kind != inst.pool.kind && !inst.pool.empty())
    throw PreconditionError("pool ballots differ from voter ballots");
  if (inst.system.kind == SystemKind::Scoring) inst.system.score_vector(m);
}

AttackInstance parse_instance(std::string_view text) {
  std::map<std::string, RawLine> header;
  std::vector<RawLine> ballots;
  static const char* kKeys[] = {"ballots", "candidates", "spoilers", "axis", "attack", "system", "preferred",
                                "budget", "society", "protected", "manipulators", "bribery-model",
                                "bribery-variant"};
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(start, nl - start);
    start = nl + 1;
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    auto colon = raw.find(':');
    if (colon == std::string_view::npos) throw ParseError(lineno, "expected 'key: value'");
    std::string_view lhs = trim(raw.substr(0, colon));
    std::string value(trim(raw.substr(colon + 1)));
    auto head = split_ws(lhs);
    if (head.empty()) throw ParseError(lineno, "missing key");
    if (head[0] == "voter" || head[0] == "pool") {
      std::string attrs(trim(lhs.substr(head[0].size())));
      ballots.push_back({lineno, head[0], attrs, value});
      continue;
    }
    if (head.size() != 1) throw ParseError(lineno, "unexpected text before ':'");
    if (std::find(std::begin(kKeys), std::end(kKeys), head[0]) == std::end(kKeys))
      throw ParseError(lineno, "unknown key '" + head[0] + "'");
    if (header.count(head[0])) throw ParseError(lineno, "duplicate key '" + head[0] + "'");
    header[head[0]] = {lineno, head[0], "", value};
    if (nl == text.size()) break;
  }

  auto need = [&](const char* k) -> const RawLine& {
    auto it = header.find(k);
    if (it == header.end()) throw ParseError(0, std::string("missing key '") + k + "'");
    return it->second;
  };
  auto has = [&](const char* k) { return header.count(k) > 0; };

  AttackInstance inst;
  const auto& bl = need("ballots");
  if (bl.value == "orders") inst.election.votes.kind = BallotKind::Orders;
  else if (bl.value == "approval") inst.election.votes.kind = BallotKind::Approval;
  else throw ParseError(bl.line, "ballots must be orders or approval");
  inst.pool.kind = inst.election.votes.kind;

  const auto& at = need("attack");
  inst.kind = parse_attack(at.value, at.line);

  const auto& cl = need("candidates");
  auto names = split_ws(cl.value);
  if (names.empty()) throw ParseError(cl.line, "empty candidate set");
  std::size_t registered = names.size();
  if (has("spoilers")) {
    const auto& sl = header["spoilers"];
    if (inst.kind != AttackKind::Ccac) throw ParseError(sl.line, "spoilers only apply to ccac");
    for (auto& n : split_ws(sl.value)) names.push_back(n);
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    int line = i < registered ? cl.line : header["spoilers"].line;
    if (!valid_name(names[i])) throw ParseError(line, "invalid candidate name '" + names[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw ParseError(line, "duplicate candidate '" + names[i] + "'");
  }
  if (names.size() > static_cast<std::size_t>(kMaxCandidates)) throw ParseError(cl.line, "more than 64 candidates");
  const int m = static_cast<int>(names.size());
  inst.election.candidates = names;
  inst.spoilers = full_set(m) & ~full_set(static_cast<int>(registered));
  NameTable table(names);

  if (has("axis")) {
    const auto& al = header["axis"];
    std::vector<CandidateId> order;
    CandSet seen = 0;
    for (auto& n : split_ws(al.value)) {
      CandidateId c = table.get(n, al.line);
      if (contains(seen, c)) throw ParseError(al.line, "candidate '" + n + "' listed twice in axis");
      seen |= bit(c);
      order.push_back(c);
    }
    if (static_cast<int>(order.size()) != m) throw ParseError(al.line, "axis must list every candidate once");
    inst.axis = Axis(std::move(order));
  }

  const auto& sy = need("system");
  inst.system = parse_system(split_ws(sy.value), sy.line);

  const auto& pl = need("preferred");
  inst.preferred = table.get(pl.value, pl.line);
  if (contains(inst.spoilers, inst.preferred)) throw ParseError(pl.line, "preferred candidate must be in C");

  if (has("budget")) {
    const auto& b = header["budget"];
    if (inst.kind == AttackKind::Ccwm) throw ParseError(b.line, "budget does not apply to ccwm");
    inst.budget = parse_int(b.value, b.line, "budget");
    if (inst.budget < 0) throw ParseError(b.line, "budget must be nonnegative");
  } else if (inst.kind != AttackKind::Ccwm) {
    throw ParseError(0, "missing key 'budget'");
  }

  if (has("society")) {
    const auto& s = header["society"];
    inst.society = parse_society(split_ws(s.value), s.line);
  }
  if (has("protected")) {
    const auto& pr = header["protected"];
    if (inst.kind != AttackKind::Ccdc) throw ParseError(pr.line, "protected only applies to ccdc");
    for (auto& n : split_ws(pr.value)) inst.protected_set |= bit(table.get(n, pr.line));
    inst.protected_set &= ~bit(inst.preferred);
  }
  if (has("manipulators")) {
    const auto& ml = header["manipulators"];
    if (inst.kind != AttackKind::Ccwm) throw ParseError(ml.line, "manipulators only apply to ccwm");
    for (auto& t : split_ws(ml.value)) {
      auto w = parse_int(t, ml.line, "manipulator weight");
      if (w < 1) throw ParseError(ml.line, "manipulator weight must be positive");
      inst.manipulators.push_back(w);
    }
  }
  for (const char* k : {"bribery-model", "bribery-variant"}) {
    if (has(k) && inst.kind != AttackKind::Bribery) throw ParseError(header[k].line, std::string(k) + " only applies to bribery");
  }
  if (has("bribery-model")) {
    const auto& l = header["bribery-model"];
    if (l.value == "standard") inst.bribery_model = BriberyModel::Standard;
    else if (l.value == "marked") inst.bribery_model = BriberyModel::Marked;
    else throw ParseError(l.line, "unknown bribery model '" + l.value + "'");
  }
  if (has("bribery-variant")) {
    const auto& l = header["bribery-variant"];
    if (l.value == "plain") inst.bribery_variant = BriberyVariant::Plain;
    else if (l.value == "negative") inst.bribery_variant = BriberyVariant::Negative;
    else if (l.value == "strongnegative") inst.bribery_variant = BriberyVariant::StrongNegative;
    else throw ParseError(l.line, "unknown bribery variant '" + l.value + "'");
  }

  for (const auto& b : ballots) {
    if (b.key == "pool" && inst.kind != AttackKind::Ccav) throw ParseError(b.line, "pool only applies to ccav");
    auto attrs = parse_attrs(b.attrs, b.line);
    Profile& target = b.key == "pool" ? inst.pool : inst.election.votes;
    if (target.kind == BallotKind::Orders) {
      if (trim(b.value).rfind('{', 0) == 0) throw ParseError(b.line, "approval ballot in an orders file");
      auto v = parse_order(b.value, table, m, b.line);
      v.weight = attrs.weight;
      v.flags = attrs.flags;
      target.orders.push_back(std::move(v));
    } else {
      auto v = parse_approval(b.value, table, b.line);
      v.weight = attrs.weight;
      v.flags = attrs.flags;
      target.approvals.push_back(std::move(v));
    }
  }

  try {
    validate_instance(inst);
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
  return inst;
}

std::string emit_instance(const AttackInstance& inst) {
  validate_instance(inst);
  const Election& e = inst.election;
  std::ostringstream os;
  os << "ballots: " << (e.votes.kind == BallotKind::Orders ? "orders" : "approval") << "\n";
  os << "candidates:";
  for (CandidateId c : members(inst.registered())) os << " " << e.candidates[c];
  os << "\n";
  if (inst.spoilers) {
    os << "spoilers:";
    for (CandidateId c : members(inst.spoilers)) os << " " << e.candidates[c];
    os << "\n";
  }
  if (inst.axis) {
    os << "axis:";
    for (CandidateId c : inst.axis->order()) os << " " << e.candidates[c];
    os << "\n";
  }
  os << "attack: " << to_string(inst.kind) << "\n";
  os << "system: " << system_text(inst.system) << "\n";
  os << "preferred: " << e.candidates[inst.preferred] << "\n";
  if (inst.kind != AttackKind::Ccwm) os << "budget: " << inst.budget << "\n";
  os << "society: " << society_text(inst.society) << "\n";
  if (inst.kind == AttackKind::Ccdc && inst.protected_set) {
    os << "protected:";
    for (CandidateId c : members(inst.protected_set)) os << " " << e.candidates[c];
    os << "\n";
  }
  if (inst.kind == AttackKind::Ccwm) {
    os << "manipulators:";
    for (auto w : inst.manipulators) os << " " << w;
    os << "\n";
  }
  if (inst.kind == AttackKind::Bribery) {
    os << "bribery-model: " << to_string(inst.bribery_model) << "\n";
    os << "bribery-variant: " << to_string(inst.bribery_variant) << "\n";
  }
  auto emit_profile = [&](const Profile& p, const char* key) {
    auto prefix = [&](std::int64_t w, const std::optional<Flags>& f) {
      std::string s = key;
      if (w != 1) s += " w=" + std::to_string(w);
      if (f) s += " flags=" + flags_text(*f);
      return s + ": ";
    };
    for (const auto& v : p.orders) os << prefix(v.weight, v.flags) << format_ranking(e, v.ranking) << "\n";
    for (const auto& v : p.approvals) os << prefix(v.weight, v.flags) << format_approval(e, v.approved) << "\n";
  };
  emit_profile(e.votes, "voter");
  emit_profile(inst.pool, "pool");
  return os.str();
}

std::string emit_outcome(const AttackInstance& inst, const AttackOutcome& out) {
  const Election& e = inst.election;
  std::ostringstream os;
  os << (out.yes ? "YES" : "NO") << "\n";
  if (!out.witness) return os.str();
  const Witness& w = *out.witness;
  for (std::size_t i = 0; i < w.manipulator_votes.size(); ++i)
    os << "manipulator " << i << ": " << format_ranking(e, w.manipulator_votes[i]) << "\n";
  for (int v : w.added_voters) os << "add-voter " << v << "\n";
  for (int v : w.deleted_voters) os << "delete-voter " << v << "\n";
  for (CandidateId c : w.added_candidates) os << "add-candidate " << e.candidates[c] << "\n";
  for (CandidateId c : w.deleted_candidates) os << "delete-candidate " << e.candidates[c] << "\n";
  for (const auto& [v, s] : w.bribes) os << "bribe " << v << " -> " << format_approval(e, s) << "\n";
  return os.str();
}

AttackOutcome parse_outcome(const AttackInstance& inst, std::string_view text) {
  NameTable table(inst.election.candidates);
  const int m = inst.m();
  AttackOutcome out;
  Witness w;
  int lineno = 0;
  bool got_decision = false;
  std::istringstream is{std::string(text)};
  std::string raw;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (!got_decision) {
      if (line == "YES") out.yes = true;
      else if (line != "NO") throw ParseError(lineno, "expected YES or NO");
      got_decision = true;
      continue;
    }
    auto toks = split_ws(line);
    const std::string& op = toks[0];
    auto rest = [&] { return trim(line.substr(line.find(op) + op.size())); };
    if (op == "manipulator") {
      auto colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError(lineno, "manipulator line needs ':'");
      w.manipulator_votes.push_back(parse_order(std::string(line.substr(colon + 1)), table, m, lineno).ranking);
    } else if (op == "add-voter" || op == "delete-voter") {
      if (toks.size() != 2) throw ParseError(lineno, "expected one index");
      int idx = static_cast<int>(parse_int(toks[1], lineno, "voter index"));
      (op == "add-voter" ? w.added_voters : w.deleted_voters).push_back(idx);
    } else if (op == "add-candidate" || op == "delete-candidate") {
      if (toks.size() != 2) throw ParseError(lineno, "expected one candidate");
      CandidateId c = table.get(toks[1], lineno);
      (op == "add-candidate" ? w.added_candidates : w.deleted_candidates).push_back(c);
    } else if (op == "bribe") {
      std::string_view r = rest();
      auto arrow = r.find("->");
      if (arrow == std::string_view::npos) throw ParseError(lineno, "bribe line needs '->'");
      int idx = static_cast<int>(parse_int(trim(r.substr(0, arrow)), lineno, "voter index"));
      auto v = parse_approval(std::string(r.substr(arrow + 2)), table, lineno);
      w.bribes.emplace_back(idx, v.approved);
    } else {
      throw ParseError(lineno, "unknown witness line '" + op + "'");
    }
  }
  if (!got_decision) throw ParseError(0, "empty outcome");
  if (out.yes) out.witness = std::move(w);
  else if (!(w == Witness{})) throw ParseError(0, "NO outcome carries a witness");
  return out;
}

}  // namespace nearsp
