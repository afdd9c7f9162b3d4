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

// Three-qubit counterpart of the incoherent-operation protocol: closed-form
// subsystem capacities, the twelve-gate coherence table and the six optimal
// ordering families.

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "qbcap/protocol2.hpp"

namespace qbcap {

struct CoherenceSplit3Q {
  double c_A = 0.0;
  double c_B = 0.0;
  double c_C = 0.0;
  double ic_A = 0.0;
  double ic_B = 0.0;
  double ic_C = 0.0;
};

/// Throws DimensionMismatch unless rho is a three-qubit state.
CoherenceSplit3Q coherence_split_3q(const DensityMatrix& rho);

/// (sub_A, sub_B, sub_C) as gap * sqrt(C_X^2 + IC_X^2).
std::array<double, 3> closed_form_sub_capacity_3q(const DensityMatrix& rho, const ModelSpec& spec);

/// The twelve gates with tabulated coherence actions.
const std::array<PermutationGate, 12>& table1_gates();

/// Split of g rho g^dagger. Throws UnsupportedGate outside table1_gates().
CoherenceSplit3Q table1_action(const DensityMatrix& rho, const PermutationGate& g);

/// (C_A, C_B, C_C) after g, evaluated from the tabulated entry sums of the
/// original state. Throws UnsupportedGate outside table1_gates().
std::array<double, 3> table1_formula(const DensityMatrix& rho, const PermutationGate& g);

enum class Family { ABC, ACB, BAC, BCA, CAB, CBA };
inline constexpr std::array<Family, 6> kFamilies{Family::ABC, Family::ACB, Family::BAC,
                                                 Family::BCA, Family::CAB, Family::CBA};
std::string_view to_string(Family f) noexcept;

struct OrderingFamily {
  Family family = Family::ABC;
  int pattern_index = 1;  ///< 1..8
  bool operator==(const OrderingFamily&) const = default;
};

/// 1-based positions from the largest population down.
std::array<int, 8> ordering_pattern_3q(OrderingFamily f);

/// First match in precedence ABC > ACB > BAC > BCA > CAB > CBA, pattern 1..8.
std::optional<OrderingFamily> detect_ordering_3q(const DensityMatrix& rho);

/// The four Step-3 gates examined for a family.
std::array<PermutationGate, 4> step3_gates(Family f);

ProtocolReport run_protocol_3q(const DensityMatrix& rho, const ModelSpec& spec);

GainCondition theorem4_condition(const DensityMatrix& rho, const ComplexMatrix& u,
                                 const ModelSpec& spec = ModelSpec::non_interacting(3, FieldAxis::longitudinal()));

}  // namespace qbcap
