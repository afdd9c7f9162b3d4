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

// Battery capacity C(rho; H) = sum_i eps_i (lambda_i - lambda_{d-1-i}) with both
// spectra ascending, and its split over single-qubit subsystems.

#pragma once

#include <optional>
#include <utility>

#include "qbcap/hamiltonians.hpp"
#include "qbcap/linalg.hpp"

namespace qbcap {

/// Throws LengthMismatch when the spectra differ in size.
double battery_capacity(const Spectrum& state, const Spectrum& energies);
/// Throws DimensionMismatch.
double battery_capacity(const DensityMatrix& rho, const Hamiltonian& h);

struct CapacityBreakdown {
  int qubits = 2;
  double total = 0.0;
  double sub_A = 0.0;
  double sub_B = 0.0;
  std::optional<double> sub_C;
  double sub_sum = 0.0;
  /// total - sub_sum, never clamped.
  double residual = 0.0;
  double sub_ic = 0.0;
  double sub_c = 0.0;
};

/// Sum of single-qubit capacities under the model's local Hamiltonian.
double sub_capacity(const DensityMatrix& rho, const ModelSpec& spec);
/// Sub of the globally dephased state.
double sub_ic(const DensityMatrix& rho, const ModelSpec& spec);

CapacityBreakdown subsystem_capacities(const DensityMatrix& rho, const ModelSpec& spec);
/// Same, with a prebuilt Hamiltonian for hot loops; h must be built from spec.
CapacityBreakdown subsystem_capacities(const DensityMatrix& rho, const ModelSpec& spec, const Hamiltonian& h);

double residual_capacity(const DensityMatrix& rho, const ModelSpec& spec);

struct CoherenceSplit2Q {
  double c_A = 0.0;
  double c_B = 0.0;
  double c_star = 0.0;
  double ic_A = 0.0;
  double ic_B = 0.0;
};

/// Throws DimensionMismatch unless rho is a two-qubit state.
CoherenceSplit2Q coherence_split_2q(const DensityMatrix& rho);

/// (sub_A, sub_B) as gap * sqrt(C_X^2 + IC_X^2).
std::pair<double, double> closed_form_sub_capacity_2q(const DensityMatrix& rho, const ModelSpec& spec);

/// Level spacing of the single-qubit Hamiltonian, 2 |(E1, E2, E3)|.
double local_gap(const ModelSpec& spec);

}  // namespace qbcap
