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

// Seeded acceptance suites: each runs a fixed number of random instances
// and compares a solver (or construction) with its exhaustive reference.

#include <cstdint>
#include <string>
#include <vector>

namespace nearsp::acceptance {

struct SuiteResult {
  std::string name;
  int required = 0;   // instances that must be evaluated
  int instances = 0;  // evaluated
  int yes = 0;
  int mismatches = 0;
  int errors = 0;
  int skipped = 0;  // reference hit its cap
  int replay_checked = 0;
  int replay_violations = 0;
  double seconds = 0;
  double time_limit = 0;  // seconds; 0 means none
  std::string first_failure;

  bool pass() const;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<SuiteResult> suites;
  double time_limit = 0;  // for the whole criterion; 0 means none

  double seconds() const;
  bool pass() const;
};

std::vector<std::string> suite_names();
std::vector<std::string> criterion_suites(int id);
std::string criterion_title(int id);

SuiteResult run_suite(const std::string& name, std::uint64_t seed = 0, int threads = 1);
CriterionResult run_criterion(int id, std::uint64_t seed = 0, int threads = 1);
// Criterion 7 summarizes the replay counts gathered by the others.
CriterionResult replay_summary(const std::vector<CriterionResult>& done);

// Without timing the text depends only on the seed.
std::string format(const SuiteResult& s, bool timing = true);
std::string format(const CriterionResult& c, bool timing = true);

}  // namespace nearsp::acceptance
