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

// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Usage: acceptance [--seed N] [--threads N] [--verbose] [--suite NAME]

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "nearsp/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace nearsp::acceptance;
  std::uint64_t seed = 0;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool verbose = false;
  std::string only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) seed = std::stoull(argv[++i]);
    else if (a == "--threads" && i + 1 < argc) threads = std::stoi(argv[++i]);
    else if (a == "--verbose") verbose = true;
    else if (a == "--suite" && i + 1 < argc) only = argv[++i];
    else {
      std::cerr << "usage: acceptance [--seed N] [--threads N] [--verbose] [--suite NAME]\n";
      return 2;
    }
  }

  if (!only.empty()) {
    auto s = run_suite(only, seed, threads);
    std::cout << format(s) << "\n";
    if (!s.first_failure.empty()) std::cout << s.first_failure << "\n";
    return s.pass() ? 0 : 1;
  }

  std::vector<CriterionResult> done;
  bool ok = true;
  for (int id = 1; id <= 6; ++id) {
    done.push_back(run_criterion(id, seed, threads));
    const auto& c = done.back();
    ok = ok && c.pass();
    std::cout << format(c) << "\n";
    for (const auto& s : c.suites) {
      if (verbose || !s.pass()) std::cout << "  " << format(s) << "\n";
      if (!s.pass() && !s.first_failure.empty()) std::cout << "    " << s.first_failure << "\n";
    }
    std::cout.flush();
  }
  auto replay = replay_summary(done);
  ok = ok && replay.pass();
  std::cout << format(replay) << "\n";
  if (verbose || !replay.pass()) std::cout << "  " << format(replay.suites[0]) << "\n";
  return ok ? 0 : 1;
}
