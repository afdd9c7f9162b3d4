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

// Necessary spectral conditions for local states to be marginals of a
// global two- or three-qubit state. Checkers take spectra so that
// hypothetical (possibly infeasible) tuples can be probed.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qbcap/linalg.hpp"

namespace qbcap {

inline constexpr double kQmpSlack = 1e-10;

struct MarginalScenario2Q {
  Spectrum global;   ///< 4 values
  Spectrum local_A;  ///< 2 values
  Spectrum local_B;  ///< 2 values
};

struct MarginalScenario3Q {
  Spectrum global;               ///< 8 values
  std::array<double, 3> deltas;  ///< local gaps, ascending
};

/// One inequality, written as slack = rhs - lhs (>= 0 when satisfied).
struct InequalityResult {
  std::string id;
  double slack = 0.0;
  bool satisfied() const noexcept { return slack >= -kQmpSlack; }
};

struct QmpReport {
  std::vector<InequalityResult> inequalities;
  bool ok() const noexcept;
  std::vector<InequalityResult> violations() const;
};

/// The four two-qubit conditions: lambda0_A >= l0 + l1, lambda0_B >= l0 + l1,
/// lambda0_A + lambda0_B >= 2 l0 + l1 + l2 and
/// |lambda0_A - lambda0_B| <= min(l3 - l1, l2 - l0).
/// Throws LengthMismatch on wrong spectrum sizes.
QmpReport check_2q(const MarginalScenario2Q& s);

/// Consequences of the first three conditions on the larger local eigenvalues:
/// lambda1_X <= l2 + l3 and lambda1_A + lambda1_B <= 2 l3 + l1 + l2.
QmpReport check_2q_implied(const MarginalScenario2Q& s);

/// The ten three-qubit conditions on sorted local gaps.
QmpReport check_3q(const MarginalScenario3Q& s);

MarginalScenario2Q marginal_scenario_2q(const DensityMatrix& rho);
MarginalScenario3Q marginal_scenario_3q(const DensityMatrix& rho);

QmpReport check_state(const DensityMatrix& rho);

}  // namespace qbcap
