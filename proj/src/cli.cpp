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

#include "nearsp/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nearsp/acceptance.hpp"
#include "nearsp/error.hpp"
#include "nearsp/io.hpp"
#include "nearsp/oracle.hpp"
#include "nearsp/reductions.hpp"
#include "nearsp/replay.hpp"
#include "nearsp/solve.hpp"
#include "nearsp/structure.hpp"

namespace nearsp::cli {
namespace {

struct Options {
  std::vector<std::string> files;
  std::string oracle_caps;
  std::uint64_t enum_cap = std::uint64_t{1} << 20;
  bool quiet = false;
  bool no_fallback = false;
  int kmax = 6;
  std::string source;  // partition | x3c
  std::string kind;
  std::vector<std::int64_t> alphas{2, 1, 0};
  int m = 3;
  int k = 1;
  std::string output;
  bool no_pad = false;
  std::string suite;
  bool list = false;
  std::uint64_t seed = 0;
  int threads = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw PreconditionError("cannot write " + path);
}

OracleCaps caps_from(const Options& o, OracleCaps c = {}) {
  if (o.oracle_caps.empty()) return c;
  // m,voters,manipulators,subsets
  std::vector<std::string> parts;
  std::stringstream ss(o.oracle_caps);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  if (parts.size() != 4) throw PreconditionError("--oracle-caps wants m,voters,manipulators,subsets");
  try {
    c.max_candidates = std::stoi(parts[0]);
    c.max_voters = std::stoi(parts[1]);
    c.max_manipulators = std::stoi(parts[2]);
    c.max_subsets = std::stoull(parts[3]);
  } catch (const std::logic_error&) {
    throw PreconditionError("--oracle-caps wants four integers");
  }
  return c;
}

AttackInstance load_instance(const std::string& path) {
  auto inst = parse_instance(read_file(path));
  validate_instance(inst);
  return inst;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int report(const AttackInstance& inst, const AttackOutcome& out, const std::string& route, double secs,
           const Options& o, std::ostream& os, std::ostream& err) {
  os << emit_outcome(inst, out);
  auto bad = out.yes ? replay_witness(inst, out) : std::vector<std::string>{};
  if (!o.quiet) {
    err << "route: " << route << "\n";
    if (out.yes) err << "replay: " << (bad.empty() ? "ok" : bad.front()) << "\n";
    err << "time: " << std::fixed << std::setprecision(6) << secs << "s\n";
  }
  if (!bad.empty()) throw Error("witness failed replay: " + bad.front());
  return out.yes ? kYes : kNo;
}

int cmd_solve(const Options& o, std::ostream& os, std::ostream& err) {
  auto inst = load_instance(o.files.at(0));
  SolveOptions opts;
  opts.caps = caps_from(o);
  opts.enum_cap = o.enum_cap;
  opts.fallback = !o.no_fallback;
  const auto t0 = std::chrono::steady_clock::now();
  auto r = solve(inst, opts);
  return report(inst, r.outcome, r.route, since(t0), o, os, err);
}

int cmd_oracle(const Options& o, std::ostream& os, std::ostream& err) {
  auto inst = load_instance(o.files.at(0));
  const auto t0 = std::chrono::steady_clock::now();
  auto out = brute_solve(inst, caps_from(o));
  return report(inst, out, "oracle", since(t0), o, os, err);
}

std::string yn(bool b) { return b ? "yes" : "no"; }

int cmd_check(const Options& o, std::ostream& os) {
  auto inst = load_instance(o.files.at(0));
  if (!inst.axis) throw PreconditionError("check needs an axis");
  const Axis& axis = *inst.axis;
  const Election& e = inst.election;
  auto table = [&](const Profile& prof, const std::string& label) {
    const int wide = static_cast<int>(label.size());
    if (prof.kind == BallotKind::Orders) {
      os << label << "  sp  sc  dodgson  perception  ballot\n";
      for (std::size_t i = 0; i < prof.orders.size(); ++i) {
        const auto& v = prof.orders[i];
        auto r = full_report(v, axis, o.kmax);
        os << std::setw(wide) << i << "  " << std::left << std::setw(3) << yn(r.is_sp) << " " << std::setw(3)
           << yn(r.is_sc) << " " << std::setw(8) << (r.dodgson_distance ? std::to_string(*r.dodgson_distance) : "-")
           << " " << std::setw(11)
           << (r.perception_flip_distance ? std::to_string(*r.perception_flip_distance) : ">" + std::to_string(o.kmax))
           << std::right << " " << format_ranking(e, v.ranking) << " (w=" << v.weight << ")\n";
      }
    } else {
      os << label << "  interval  ballot\n";
      for (std::size_t i = 0; i < prof.approvals.size(); ++i) {
        const auto& v = prof.approvals[i];
        os << std::setw(wide) << i << "  " << std::left << std::setw(8) << yn(is_interval(v.approved, axis))
           << std::right << "  {" << format_approval(e, v.approved) << "} (w=" << v.weight << ")\n";
      }
    }
  };
  table(e.votes, "voter");
  if (!inst.pool.empty()) table(inst.pool, "pool ");
  os << "mavericks: " << count_mavericks(e.votes, axis);
  if (!inst.pool.empty()) os << " (pool " << count_mavericks(inst.pool, axis) << ")";
  os << "\n";
  if (inst.society.kind != SocietyKind::None) os << "society holds: " << yn(society_holds(inst)) << "\n";
  if (e.votes.kind == BallotKind::Orders) {
    const CandSet reg = inst.registered();
    for (int k = 1; k <= 3; ++k) {
      os << k << "-local (sufficient): "
         << yn(locality_check(reg, inst.spoilers, e.votes.orders, axis, k, LocalityMode::Sufficient));
      if (inst.m() <= 12)
        os << ", exhaustive: " << yn(locality_check(reg, inst.spoilers, e.votes.orders, axis, k, LocalityMode::Exhaustive));
      os << "\n";
    }
  }
  return kYes;
}

int cmd_reduce(const Options& o, std::ostream& os) {
  const std::string text = read_file(o.files.at(0));
  AttackInstance inst;
  if (o.source == "partition") {
    PartitionParams params;
    params.alphas = o.alphas;
    params.m = o.m;
    params.k = o.k;
    inst = partition_to_ccwm(parse_partition_kind(o.kind), parse_partition(text), params);
  } else {
    inst = x3c_to_control(parse_x3c_kind(o.kind), parse_x3c(text), !o.no_pad);
  }
  const std::string out = emit_instance(inst);
  if (!o.output.empty()) write_file(o.output, out);
  else os << out;
  return kYes;
}

int cmd_verify(const Options& o, std::ostream& os) {
  const std::string src = read_file(o.files.at(0));
  auto inst = load_instance(o.files.at(1));
  const OracleCaps caps = caps_from(o, OracleCaps::relaxed());
  const bool x3c = src.find("base:") != std::string::npos;
  ReductionReport r = x3c ? verify_reduction(parse_x3c(src), inst, caps) : verify_reduction(parse_partition(src), inst, caps);
  os << "agree: " << yn(r.source_yes) << "/" << yn(r.reduced_yes) << "\n";
  os << "society: " << (r.society_ok ? "ok" : "violated") << "\n";
  return r.agree() && r.society_ok ? kYes : kNo;
}

int cmd_bench(const Options& o, std::ostream& os) {
  using namespace acceptance;
  if (o.list) {
    for (const auto& s : suite_names()) os << s << "\n";
    for (int id = 1; id <= 7; ++id) os << "criterion" << id << "\n";
    os << "all\n";
    return kYes;
  }
  if (o.suite.empty()) throw PreconditionError("bench needs --suite or --list");
  auto line = [&](const auto& r) { return format(r, !o.quiet); };
  const std::string& name = o.suite;
  if (name.rfind("criterion", 0) == 0 || name == "all") {
    int lo = 1, hi = 7;
    if (name != "all") {
      try {
        lo = hi = std::stoi(name.substr(9));
      } catch (const std::logic_error&) {
        throw PreconditionError("unknown suite '" + name + "'");
      }
      if (lo < 1 || lo > 7) throw PreconditionError("criteria are numbered 1 to 7");
    }
    std::vector<CriterionResult> done;
    bool ok = true;
    for (int id = lo == 7 ? 1 : lo; id <= std::min(hi, 6); ++id) {
      done.push_back(run_criterion(id, o.seed, o.threads));
      if (lo == 7) continue;
      ok = ok && done.back().pass();
      os << line(done.back()) << "\n";
      for (const auto& s : done.back().suites) os << "  " << line(s) << "\n";
    }
    if (hi == 7) {
      auto r = replay_summary(done);
      ok = ok && r.pass();
      os << line(r) << "\n";
    }
    return ok ? kYes : kNo;
  }
  auto s = run_suite(name, o.seed, o.threads);
  os << line(s) << "\n";
  if (!s.pass() && !s.first_failure.empty()) os << s.first_failure << "\n";
  return s.pass() ? kYes : kNo;
}

}  // namespace

std::string usage() {
  return "usage: nearsp <command> [flags]\n"
         "  solve <instance>                 decide with the matching solver\n"
         "  oracle <instance>                decide by exhaustive search\n"
         "  check <instance> [--kmax N]      per-voter structure table\n"
         "  reduce partition|x3c --kind K <src> [-o dst] [--alphas a1 a2 a3] [--m N] [--k N] [--no-pad]\n"
         "  verify <src> <dst>               compare source and gadget decisions\n"
         "  bench --suite NAME|criterionN|all [--seed N] [--threads N] | --list\n"
         "exit: 0 yes, 1 no, 2 error, 3 cap exceeded\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Manipulation, control and bribery solvers for nearly single-peaked elections", "nearsp"};
  app.require_subcommand(1, 1);
  app.footer("exit: 0 yes, 1 no, 2 error, 3 cap exceeded");

  auto add_caps = [&](CLI::App* c) {
    c->add_option("--oracle-caps", o.oracle_caps, "oracle limits as m,voters,manipulators,subsets");
  };
  auto* solve_cmd = app.add_subcommand("solve", "decide with the matching solver");
  solve_cmd->add_option("instance", o.files)->required()->expected(1);
  solve_cmd->add_option("--enum-cap", o.enum_cap, "cap on enumerated subsets inside fast solvers");
  solve_cmd->add_flag("--no-fallback", o.no_fallback, "fail instead of using the oracle when a solver's precondition fails");
  solve_cmd->add_flag("--quiet", o.quiet, "omit route, replay and timing lines on stderr");
  add_caps(solve_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "decide by exhaustive search");
  oracle_cmd->add_option("instance", o.files)->required()->expected(1);
  oracle_cmd->add_flag("--quiet", o.quiet, "omit timing lines on stderr");
  add_caps(oracle_cmd);

  auto* check_cmd = app.add_subcommand("check", "per-voter structure table");
  check_cmd->add_option("instance", o.files)->required()->expected(1);
  check_cmd->add_option("--kmax", o.kmax, "largest perception distance to search");

  auto* reduce_cmd = app.add_subcommand("reduce", "build a hardness gadget from a source instance");
  reduce_cmd->add_option("source", o.source)->required()->check(CLI::IsMember({"partition", "x3c"}));
  reduce_cmd->add_option("file", o.files)->required()->expected(1);
  reduce_cmd->add_option("--kind", o.kind, "gadget kind")->required();
  reduce_cmd->add_option("--alphas", o.alphas, "scoring vector for partition gadgets")->expected(3)->allow_extra_args(false);
  reduce_cmd->add_option("--m", o.m, "candidates for vetokmav");
  reduce_cmd->add_option("--k", o.k, "maverick bound for vetokmav");
  reduce_cmd->add_option("-o", o.output, "output file (default stdout)");
  reduce_cmd->add_flag("--no-pad", o.no_pad, "do not pad small X3C sources");

  auto* verify_cmd = app.add_subcommand("verify", "compare source and gadget decisions");
  verify_cmd->add_option("files", o.files, "source and gadget")->required()->expected(2);
  add_caps(verify_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "run an acceptance suite");
  bench_cmd->add_option("--suite", o.suite, "suite name, criterionN, or all");
  bench_cmd->add_flag("--list", o.list, "list suite names");
  bench_cmd->add_option("--seed", o.seed, "base seed");
  bench_cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--quiet", o.quiet, "drop timings");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return kError;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(o, out, err);
    if (oracle_cmd->parsed()) return cmd_oracle(o, out, err);
    if (check_cmd->parsed()) return cmd_check(o, out);
    if (reduce_cmd->parsed()) return cmd_reduce(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    return cmd_bench(o, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace nearsp::cli
