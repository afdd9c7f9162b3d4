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

// Two-qubit incoherent-operation protocol: raise the summed subsystem
// capacity with transposition gates while the total capacity stays fixed.
//
//   1. stop if the residual capacity is already zero;
//   2. move the diagonal into an optimal ordering (c1 before, c2 after);
//   3. swap the smallest of C_A, C_B, C* out of the way (c3);
//   4. keep the best of c1, c2, c3 and trace back its gates.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbcap/capacity.hpp"
#include "qbcap/gates.hpp"
#include "qbcap/hamiltonians.hpp"

namespace qbcap {

/// Threshold for "residual is zero" and for calling c2/c3 a gain over c1.
inline constexpr double kGainTol = 1e-10;

enum class Verdict { AlreadyTight, Gain, NoGain };
std::string_view to_string(Verdict v) noexcept;

/// Which Step-3 branch fired.
enum class Step3Case { None, KeepCStar, SwapA, SwapB };
std::string_view to_string(Step3Case c) noexcept;

struct ProtocolReport {
  int qubits = 2;
  double total = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  /// Gates of the traced-back best path, in application order.
  std::vector<PermutationGate> gates_applied;
  double initial_residual = 0.0;
  double final_residual = 0.0;
  Verdict verdict = Verdict::NoGain;

  /// Step 2 details.
  bool reordered = false;
  std::string target;  ///< ordering family reached after Step 2
  std::vector<PermutationGate> reorder_gates;
  /// Step 3 details.
  Step3Case step3_case = Step3Case::None;
  std::optional<PermutationGate> step3_gate;
  /// Step-3 candidates as (gate, Sub) pairs; one entry for two qubits, four for three.
  std::vector<std::pair<PermutationGate, double>> candidates;
  /// Three-qubit ordering family ("ABC", ...); empty for two qubits.
  std::string family;

  /// States after Step 2 (c2 path), after Step 3 (c3 path) and on the traced path.
  ComplexMatrix reordered_state;
  ComplexMatrix step3_state;
  ComplexMatrix final_state;

  std::vector<std::string> warnings;
};

enum class Ordering2Q { OptimalA, OptimalB, NotOptimal };
std::string_view to_string(Ordering2Q o) noexcept;

/// Patterns listed from the largest population down, 1-based.
const std::array<std::array<int, 4>, 4>& ordering_patterns_2q(Ordering2Q family);

/// OptimalA takes precedence when both families match.
Ordering2Q detect_optimal_ordering(const DensityMatrix& rho);

/// Throws InvalidArgument for NotOptimal.
Reordering reorder_diagonal(const DensityMatrix& rho, Ordering2Q target);

struct IdentityCheck {
  std::string id;
  double error = 0.0;
  /// False for auxiliary checks that are not part of the stated identity.
  bool claimed = true;
  bool pass(double tol) const noexcept { return error <= tol; }
};

struct IdentityReport {
  PermutationGate gate;
  std::vector<IdentityCheck> checks;
  /// Largest error among claimed checks.
  double max_claimed_error() const noexcept;
};

/// Checks the transposition's effect on (sub_A, sub_B) or on (C, IC).
/// Throws UnsupportedGate outside {U14, U23, U12, U34, U13, U24}.
IdentityReport gate_action_identities(const DensityMatrix& rho, const PermutationGate& g,
                                      const ModelSpec& spec = ModelSpec::non_interacting(2, FieldAxis::longitudinal()));

ProtocolReport run_protocol(const DensityMatrix& rho, const ModelSpec& spec);

struct GainCondition {
  /// Sum of the largest populations of the evolved reductions exceeds the sum
  /// of the largest eigenvalues of the original reductions.
  bool condition = false;
  /// Sub(U rho U^dagger) > Sub(rho).
  bool gain = false;
  double xi_sum = 0.0;
  double lambda_sum = 0.0;
  double sub_before = 0.0;
  double sub_after = 0.0;
};

/// Throws NotUnitary / DimensionMismatch. The model only sets local gaps and
/// does not affect either flag.
GainCondition theorem2_condition(const DensityMatrix& rho, const ComplexMatrix& u,
                                 const ModelSpec& spec = ModelSpec::non_interacting(2, FieldAxis::longitudinal()));

/// Shared by both qubit counts.
GainCondition gain_condition(const DensityMatrix& rho, const ComplexMatrix& u, const ModelSpec& spec);

/// Best Sub over products of at most `depth` transpositions (depth <= 2).
double exhaustive_best_sub(const DensityMatrix& rho, const ModelSpec& spec, int depth = 2);

}  // namespace qbcap
