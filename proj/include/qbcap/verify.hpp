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

// Monte-Carlo and identity verification suites. Each sample is independent
// and seeded from (suite, seed, index); the OpenMP kernel and the serial
// reference produce identical results.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qbcap {

/// Suite tolerances: trade-off bounds, entrywise identities (gate actions,
/// coherence table, algebra closure), local equivalence, gate invariants.
inline constexpr double kTradeoffTol = 1e-9;
inline constexpr double kIdentityTol = 1e-12;
inline constexpr double kLocalEquivTol = 1e-9;
inline constexpr double kInvariantTol = 1e-10;

enum class Suite { Tradeoff2, Tradeoff3, Qmp, Theorem2, Theorem4, GateIdentities, Table1, Cartan };

std::string_view to_string(Suite s) noexcept;
/// Accepts the CLI names ("tradeoff2", "gate-identities", ...). Throws InvalidArgument.
Suite parse_suite(std::string_view name);
const std::vector<Suite>& all_suites();

enum class Execution { Serial, Parallel };

/// Per-check totals inside a suite.
struct CheckTally {
  std::string id;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  /// Largest amount by which the check missed its bound (0 when none).
  double max_violation = 0.0;
  std::optional<std::size_t> first_offender;
};

struct SuiteResult {
  Suite suite = Suite::Tradeoff2;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t violations = 0;
  double max_violation_magnitude = 0.0;
  std::optional<std::size_t> first_offender;
  double seconds = 0.0;
  std::vector<CheckTally> tallies;
};

/// n >= 1 samples; throws InvalidArgument for n == 0.
SuiteResult run_suite(Suite suite, std::size_t n, std::uint64_t seed, Execution exec = Execution::Parallel);

/// Whether the parallel kernel was built with OpenMP.
bool parallel_available() noexcept;

}  // namespace qbcap
