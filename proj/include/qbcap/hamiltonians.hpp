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

// Battery Hamiltonians: a uniform external field on every qubit plus an
// optional two-qubit spin interaction,
//
//   H = sum_q (E1 sx + E2 sy + E3 sz)_q + alpha J (sx sx + sy sy) + beta J sz sz.
//
// Pauli matrices use the standard convention, sy = [[0, -i], [i, 0]].

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "qbcap/linalg.hpp"

namespace qbcap {

namespace pauli {
ComplexMatrix i2();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

enum class AxisKind { Transverse, Longitudinal, General };

struct FieldAxis {
  AxisKind kind = AxisKind::Longitudinal;
  /// (E1, E2, E3) for General; ignored otherwise.
  std::array<double, 3> components{};

  static FieldAxis transverse() { return {AxisKind::Transverse, {}}; }
  static FieldAxis longitudinal() { return {AxisKind::Longitudinal, {}}; }
  static FieldAxis general(double e1, double e2, double e3) { return {AxisKind::General, {e1, e2, e3}}; }

  bool operator==(const FieldAxis&) const = default;
};

enum class ModelKind { NonInteracting, Ising, XX, XXZ, XXX, Custom };

std::string_view to_string(AxisKind kind) noexcept;
std::string_view to_string(ModelKind kind) noexcept;

struct ModelSpec {
  int qubits = 2;
  FieldAxis axis;
  double E = 1.0;  ///< field strength (Transverse / Longitudinal)
  double J = 0.0;  ///< coupling, >= 0
  double alpha = 0.0;
  double beta = 0.0;
  ModelKind model = ModelKind::NonInteracting;
  /// Explicit matrix for Custom models.
  std::optional<ComplexMatrix> custom;

  /// Throws BadSpec on the first violated constraint.
  void validate() const;

  /// Field per qubit as (E1, E2, E3).
  std::array<double, 3> field_vector() const;

  static ModelSpec non_interacting(int qubits, FieldAxis axis, double E = 1.0);
  static ModelSpec ising(FieldAxis axis, double E, double J);
  static ModelSpec xx(FieldAxis axis, double E, double J, double alpha = 1.0);
  static ModelSpec xxz(FieldAxis axis, double E, double J, double alpha);
  static ModelSpec xxx(FieldAxis axis, double E, double J);
  static ModelSpec custom_matrix(ComplexMatrix h, FieldAxis axis, double E = 1.0);
};

/// Same qubits and field, no interaction.
ModelSpec field_only(const ModelSpec& spec);

class Hamiltonian {
 public:
  Hamiltonian(ComplexMatrix matrix, ModelSpec spec);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  const ModelSpec& spec() const noexcept { return spec_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

 private:
  ComplexMatrix matrix_;
  Spectrum spectrum_;
  ModelSpec spec_;
};

/// Field-only Hamiltonian for two or three qubits; requires NonInteracting.
Hamiltonian build_h0(const ModelSpec& spec);
/// Two-qubit Ising / XX / XXZ / XXX, or a Custom matrix.
Hamiltonian build_model(const ModelSpec& spec);
/// Dispatches on spec.model.
Hamiltonian build_hamiltonian(const ModelSpec& spec);

/// Local Hamiltonian of one qubit (0 = A, 1 = B, 2 = C); equal for every qubit.
Hamiltonian subsystem_hamiltonian(const ModelSpec& spec, int which);

/// C(rho; h) >= C(rho; h0) - 1e-10.
bool h0_dominance_check(const DensityMatrix& rho, const Hamiltonian& h, const Hamiltonian& h0);

}  // namespace qbcap
