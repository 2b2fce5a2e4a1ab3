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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nearsp/acceptance.hpp"
#include "nearsp/error.hpp"
#include "nearsp/io.hpp"
#include "nearsp/oracle.hpp"
#include "nearsp/reductions.hpp"
#include "nearsp/replay.hpp"
#include "nearsp/solve.hpp"
#include "nearsp/structure.hpp"

namespace py = pybind11;
using namespace nearsp;

namespace {

Axis to_axis(const std::vector<CandidateId>& order) {
  std::vector<bool> seen(order.size(), false);
  for (CandidateId c : order) {
    if (c < 0 || c >= static_cast<int>(order.size()) || seen[c]) throw PreconditionError("axis must be a permutation");
    seen[c] = true;
  }
  return Axis(order);
}

void check_ranking(const std::vector<CandidateId>& r, const Axis& axis) {
  if (static_cast<int>(r.size()) != axis.size()) throw PreconditionError("ranking and axis differ in length");
  to_axis(r);
}

py::dict witness_dict(const AttackInstance& inst, const Witness& w) {
  const auto& names = inst.election.candidates;
  auto named = [&](const std::vector<CandidateId>& ids) {
    std::vector<std::string> out;
    for (CandidateId c : ids) out.push_back(names[c]);
    return out;
  };
  py::dict d;
  std::vector<std::vector<std::string>> votes;
  for (const auto& v : w.manipulator_votes) votes.push_back(named(v));
  d["manipulator_votes"] = votes;
  d["added_voters"] = w.added_voters;
  d["deleted_voters"] = w.deleted_voters;
  d["added_candidates"] = named(w.added_candidates);
  d["deleted_candidates"] = named(w.deleted_candidates);
  std::vector<std::pair<int, std::vector<std::string>>> bribes;
  for (const auto& [v, s] : w.bribes) bribes.push_back({v, named(members(s))});
  d["bribes"] = bribes;
  return d;
}

// Outcome as seen from Python: decision, witness, canonical text.
struct PyOutcome {
  bool yes = false;
  std::string route;
  py::object witness = py::none();
  std::string text;
};

PyOutcome wrap(const AttackInstance& inst, const AttackOutcome& out, std::string route) {
  PyOutcome r;
  r.yes = out.yes;
  r.route = std::move(route);
  if (out.witness) r.witness = witness_dict(inst, *out.witness);
  r.text = emit_outcome(inst, out);
  return r;
}

OracleCaps caps_from(const py::object& caps) {
  if (caps.is_none()) return {};
  auto t = caps.cast<std::tuple<int, int, int, std::uint64_t>>();
  return {std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t)};
}

AttackInstance load(const std::string& text) {
  auto inst = parse_instance(text);
  validate_instance(inst);
  return inst;
}

py::dict suite_dict(const acceptance::SuiteResult& s) {
  py::dict d;
  d["name"] = s.name;
  d["passed"] = s.pass();
  d["instances"] = s.instances;
  d["required"] = s.required;
  d["yes"] = s.yes;
  d["mismatches"] = s.mismatches;
  d["errors"] = s.errors;
  d["skipped"] = s.skipped;
  d["replay_checked"] = s.replay_checked;
  d["replay_violations"] = s.replay_violations;
  d["seconds"] = s.seconds;
  d["first_failure"] = s.first_failure;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Manipulation, control and bribery solvers for nearly single-peaked elections";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  py::class_<AttackInstance>(m, "Instance")
      .def_property_readonly("attack", [](const AttackInstance& i) { return to_string(i.kind); })
      .def_property_readonly("candidates", [](const AttackInstance& i) { return i.election.candidates; })
      .def_property_readonly("preferred", [](const AttackInstance& i) { return i.election.candidates[i.preferred]; })
      .def_property_readonly("budget", [](const AttackInstance& i) { return i.budget; })
      .def_property_readonly("voters", [](const AttackInstance& i) { return i.election.votes.size(); })
      .def_property_readonly("society_holds", &society_holds)
      .def("emit", &emit_instance)
      .def("__str__", &emit_instance)
      .def("__eq__", [](const AttackInstance& a, const AttackInstance& b) { return a == b; })
      .def("__repr__", [](const AttackInstance& i) {
        return "<Instance " + to_string(i.kind) + " m=" + std::to_string(i.m()) + " n=" +
               std::to_string(i.election.votes.size()) + ">";
      });

  py::class_<PyOutcome>(m, "Outcome")
      .def_readonly("yes", &PyOutcome::yes)
      .def_readonly("route", &PyOutcome::route)
      .def_readonly("witness", &PyOutcome::witness)
      .def_readonly("text", &PyOutcome::text)
      .def("__bool__", [](const PyOutcome& o) { return o.yes; })
      .def("__repr__", [](const PyOutcome& o) {
        return std::string("<Outcome ") + (o.yes ? "YES" : "NO") + " via " + o.route + ">";
      });

  m.def("parse_instance", &load, py::arg("text"), "Parse and validate an instance in the .elect format.");

  m.def(
      "solve",
      [](const AttackInstance& inst, std::uint64_t enum_cap, bool fallback, py::object caps) {
        SolveOptions o;
        o.enum_cap = enum_cap;
        o.fallback = fallback;
        o.caps = caps_from(caps);
        SolveResult r;
        {
          py::gil_scoped_release nogil;
          r = solve(inst, o);
        }
        return wrap(inst, r.outcome, r.route);
      },
      py::arg("instance"), py::arg("enum_cap") = std::uint64_t{1} << 20, py::arg("fallback") = true,
      py::arg("oracle_caps") = py::none(),
      "Decide with the matching polynomial solver, or the oracle when none applies.");

  m.def(
      "oracle",
      [](const AttackInstance& inst, py::object caps) {
        AttackOutcome out;
        const OracleCaps c = caps_from(caps);
        {
          py::gil_scoped_release nogil;
          out = brute_solve(inst, c);
        }
        return wrap(inst, out, "oracle");
      },
      py::arg("instance"), py::arg("oracle_caps") = py::none(),
      "Decide by exhaustive search. oracle_caps is (m, voters, manipulators, subsets).");

  m.def(
      "replay",
      [](const AttackInstance& inst, const std::string& outcome_text) {
        return replay_witness(inst, parse_outcome(inst, outcome_text));
      },
      py::arg("instance"), py::arg("outcome_text"), "Violations found when replaying an outcome; empty if valid.");

  m.def(
      "is_single_peaked",
      [](const std::vector<CandidateId>& r, const std::vector<CandidateId>& axis) {
        auto a = to_axis(axis);
        check_ranking(r, a);
        return is_single_peaked(r, a);
      },
      py::arg("ranking"), py::arg("axis"));
  m.def(
      "is_single_caved",
      [](const std::vector<CandidateId>& r, const std::vector<CandidateId>& axis) {
        auto a = to_axis(axis);
        check_ranking(r, a);
        return is_single_caved(r, a);
      },
      py::arg("ranking"), py::arg("axis"));
  m.def(
      "dodgson_distance",
      [](const std::vector<CandidateId>& r, const std::vector<CandidateId>& axis) {
        auto a = to_axis(axis);
        check_ranking(r, a);
        return dodgson_distance(r, a);
      },
      py::arg("ranking"), py::arg("axis"), "Fewest adjacent swaps turning the vote single-peaked.");
  m.def(
      "perception_flip_distance",
      [](const std::vector<CandidateId>& r, const std::vector<CandidateId>& axis, int kmax) {
        auto a = to_axis(axis);
        check_ranking(r, a);
        return perception_flip_distance(r, a, kmax);
      },
      py::arg("ranking"), py::arg("axis"), py::arg("kmax") = 6,
      "Fewest adjacent axis swaps making the vote single-peaked, or None past kmax.");

  m.def(
      "reduce_partition",
      [](const std::string& kind, const std::vector<std::int64_t>& values, const std::vector<std::int64_t>& alphas,
         int m_, int k) {
        PartitionParams p;
        p.alphas = alphas;
        p.m = m_;
        p.k = k;
        return partition_to_ccwm(parse_partition_kind(kind), PartitionInstance{values}, p);
      },
      py::arg("kind"), py::arg("values"), py::arg("alphas") = std::vector<std::int64_t>{2, 1, 0}, py::arg("m") = 3,
      py::arg("k") = 1);
  m.def(
      "reduce_x3c",
      [](const std::string& kind, int base, const std::vector<std::array<int, 3>>& sets, bool pad) {
        return x3c_to_control(parse_x3c_kind(kind), X3CInstance{base, sets}, pad);
      },
      py::arg("kind"), py::arg("base"), py::arg("sets"), py::arg("pad") = true, "Sets use 0-based elements.");
  m.def(
      "verify_partition",
      [](const std::vector<std::int64_t>& values, const AttackInstance& inst) {
        auto r = verify_reduction(PartitionInstance{values}, inst);
        return py::make_tuple(r.source_yes, r.reduced_yes, r.society_ok);
      },
      py::arg("values"), py::arg("instance"), "(source yes, gadget yes, society holds)");
  m.def(
      "verify_x3c",
      [](int base, const std::vector<std::array<int, 3>>& sets, const AttackInstance& inst) {
        auto r = verify_reduction(X3CInstance{base, sets}, inst);
        return py::make_tuple(r.source_yes, r.reduced_yes, r.society_ok);
      },
      py::arg("base"), py::arg("sets"), py::arg("instance"));

  m.def("suite_names", &acceptance::suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, int threads) {
        acceptance::SuiteResult s;
        {
          py::gil_scoped_release nogil;
          s = acceptance::run_suite(name, seed, threads);
        }
        return suite_dict(s);
      },
      py::arg("name"), py::arg("seed") = 0, py::arg("threads") = 1);
}
