// Copyright 2026 The qbcap Authors
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

// Serial reference vs OpenMP kernel for each verification suite.
//
//   bench_suites [n] [suite...]

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "qbcap/sampling.hpp"
#include "qbcap/verify.hpp"

int main(int argc, char** argv) {
  using namespace qbcap;
  std::size_t n = 2000;
  std::vector<Suite> suites;
  try {
    if (argc > 1) n = std::stoul(argv[1]);
    for (int k = 2; k < argc; ++k) suites.push_back(parse_suite(argv[k]));
  } catch (const std::exception& e) {
    std::cerr << "bench_suites: " << e.what() << "\nusage: bench_suites [n] [suite...]\n";
    return 1;
  }
  if (suites.empty()) suites = all_suites();
  if (!parallel_available()) std::cerr << "bench_suites: built without OpenMP; both columns run serially\n";

  std::cout << std::left << std::setw(16) << "suite" << std::right << std::setw(8) << "n" << std::setw(12)
            << "serial_s" << std::setw(12) << "openmp_s" << std::setw(10) << "speedup" << std::setw(8) << "same"
            << '\n';
  int rc = 0;
  for (Suite s : suites) {
    const SuiteResult a = run_suite(s, n, kDefaultSeed, Execution::Serial);
    const SuiteResult b = run_suite(s, n, kDefaultSeed, Execution::Parallel);
    const bool same = a.violations == b.violations && a.max_violation_magnitude == b.max_violation_magnitude &&
                      a.first_offender == b.first_offender;
    if (!same) rc = 2;
    std::cout << std::left << std::setw(16) << to_string(s) << std::right << std::setw(8) << n << std::setw(12)
              << std::fixed << std::setprecision(4) << a.seconds << std::setw(12) << b.seconds << std::setw(10)
              << std::setprecision(2) << a.seconds / b.seconds << std::setw(8) << (same ? "yes" : "NO") << '\n';
  }
  return rc;
}
