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

#include "qbcap/hamiltonians.hpp"

#include <cmath>
#include <string>

#include "qbcap/capacity.hpp"

namespace qbcap {

namespace pauli {
ComplexMatrix i2() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

std::string_view to_string(AxisKind kind) noexcept {
  switch (kind) {
    case AxisKind::Transverse: return "transverse";
    case AxisKind::Longitudinal: return "longitudinal";
    case AxisKind::General: return "general";
  }
  return "unknown";
}

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::NonInteracting: return "NonInteracting";
    case ModelKind::Ising: return "Ising";
    case ModelKind::XX: return "XX";
    case ModelKind::XXZ: return "XXZ";
    case ModelKind::XXX: return "XXX";
    case ModelKind::Custom: return "Custom";
  }
  return "unknown";
}

namespace {

[[noreturn]] void bad_spec(const std::string& why) { throw Error(ErrorKind::BadSpec, why); }

ComplexMatrix single_qubit_field(const std::array<double, 3>& e) {
  return pauli::x() * cplx(e[0]) + pauli::y() * cplx(e[1]) + pauli::z() * cplx(e[2]);
}

// `op` on qubit `q` of an n-qubit register.
ComplexMatrix embed(const ComplexMatrix& op, int q, int n) {
  ComplexMatrix out = q == 0 ? op : pauli::i2();
  for (int k = 1; k < n; ++k) out = kron(out, k == q ? op : pauli::i2());
  return out;
}

ComplexMatrix field_matrix(const ModelSpec& spec) {
  const ComplexMatrix h1 = single_qubit_field(spec.field_vector());
  const std::size_t dim = std::size_t{1} << spec.qubits;
  ComplexMatrix h(dim);
  for (int q = 0; q < spec.qubits; ++q) h += embed(h1, q, spec.qubits);
  return h;
}

}  // namespace

std::array<double, 3> ModelSpec::field_vector() const {
  switch (axis.kind) {
    case AxisKind::Transverse: return {E, E, 0.0};
    case AxisKind::Longitudinal: return {0.0, 0.0, E};
    case AxisKind::General: return axis.components;
  }
  return {};
}

void ModelSpec::validate() const {
  if (qubits != 2 && qubits != 3) bad_spec("qubits must be 2 or 3, got " + std::to_string(qubits));
  if (!std::isfinite(E) || !std::isfinite(J) || !std::isfinite(alpha) || !std::isfinite(beta))
    bad_spec("non-finite parameter");
  if (axis.kind == AxisKind::General && axis.components == std::array<double, 3>{0.0, 0.0, 0.0})
    bad_spec("general field needs a nonzero (E1, E2, E3)");
  if (J < 0.0) bad_spec("coupling J must be >= 0");
  if (std::abs(alpha) > 1.0) bad_spec("|alpha| must be <= 1");
  if (std::abs(beta) > 1.0) bad_spec("|beta| must be <= 1");

  switch (model) {
    case ModelKind::NonInteracting:
      break;
    case ModelKind::Ising:
      if (alpha != 0.0 || beta != 1.0) bad_spec("Ising requires alpha = 0, beta = 1");
      break;
    case ModelKind::XX:
      if (beta != 0.0 || alpha == 0.0) bad_spec("XX requires beta = 0, alpha != 0");
      break;
    case ModelKind::XXZ:
      if (beta != 1.0 || alpha == 0.0) bad_spec("XXZ requires beta = 1, alpha != 0");
      break;
    case ModelKind::XXX:
      if (alpha != 1.0 || beta != 1.0) bad_spec("XXX requires alpha = beta = 1");
      break;
    case ModelKind::Custom: {
      if (!custom) bad_spec("Custom model needs an explicit matrix");
      const std::size_t dim = std::size_t{1} << qubits;
      if (custom->dim() != dim) bad_spec("Custom matrix dimension does not match qubit count");
      if (!is_hermitian(*custom)) bad_spec("Custom matrix is not Hermitian");
      break;
    }
  }
  const bool two_body = model == ModelKind::Ising || model == ModelKind::XX || model == ModelKind::XXZ ||
                        model == ModelKind::XXX;
  if (two_body && qubits != 2) bad_spec("interacting models are two-qubit only; use Custom for three qubits");
}

ModelSpec ModelSpec::non_interacting(int qubits, FieldAxis axis, double E) {
  ModelSpec s;
  s.qubits = qubits;
  s.axis = axis;
  s.E = E;
  return s;
}

ModelSpec ModelSpec::ising(FieldAxis axis, double E, double J) {
  ModelSpec s = non_interacting(2, axis, E);
  s.model = ModelKind::Ising;
  s.J = J;
  s.beta = 1.0;
  return s;
}

ModelSpec ModelSpec::xx(FieldAxis axis, double E, double J, double alpha) {
  ModelSpec s = non_interacting(2, axis, E);
  s.model = ModelKind::XX;
  s.J = J;
  s.alpha = alpha;
  return s;
}

ModelSpec ModelSpec::xxz(FieldAxis axis, double E, double J, double alpha) {
  ModelSpec s = non_interacting(2, axis, E);
  s.model = ModelKind::XXZ;
  s.J = J;
  s.alpha = alpha;
  s.beta = 1.0;
  return s;
}

ModelSpec ModelSpec::xxx(FieldAxis axis, double E, double J) {
  ModelSpec s = non_interacting(2, axis, E);
  s.model = ModelKind::XXX;
  s.J = J;
  s.alpha = 1.0;
  s.beta = 1.0;
  return s;
}

ModelSpec ModelSpec::custom_matrix(ComplexMatrix h, FieldAxis axis, double E) {
  ModelSpec s;
  s.qubits = h.dim() == 8 ? 3 : 2;
  s.axis = axis;
  s.E = E;
  s.model = ModelKind::Custom;
  s.custom = std::move(h);
  return s;
}

ModelSpec field_only(const ModelSpec& spec) {
  ModelSpec s = spec;
  s.model = ModelKind::NonInteracting;
  s.J = 0.0;
  s.alpha = 0.0;
  s.beta = 0.0;
  s.custom.reset();
  return s;
}

Hamiltonian::Hamiltonian(ComplexMatrix matrix, ModelSpec spec)
    : matrix_(std::move(matrix)), spectrum_(hermitian_eigenvalues(matrix_)), spec_(std::move(spec)) {}

Hamiltonian build_h0(const ModelSpec& spec) {
  spec.validate();
  if (spec.model != ModelKind::NonInteracting) bad_spec("build_h0 needs a NonInteracting spec");
  return Hamiltonian(field_matrix(spec), spec);
}

Hamiltonian build_model(const ModelSpec& spec) {
  spec.validate();
  if (spec.model == ModelKind::Custom) return Hamiltonian(*spec.custom, spec);
  if (spec.model == ModelKind::NonInteracting) bad_spec("build_model needs an interacting model");

  const ComplexMatrix xx = kron(pauli::x(), pauli::x());
  const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  const ComplexMatrix zz = kron(pauli::z(), pauli::z());
  ComplexMatrix h = field_matrix(spec);
  h += (xx + yy) * cplx(spec.alpha * spec.J);
  h += zz * cplx(spec.beta * spec.J);
  return Hamiltonian(std::move(h), spec);
}

Hamiltonian build_hamiltonian(const ModelSpec& spec) {
  return spec.model == ModelKind::NonInteracting ? build_h0(spec) : build_model(spec);
}

Hamiltonian subsystem_hamiltonian(const ModelSpec& spec, int which) {
  spec.validate();
  if (which < 0 || which >= spec.qubits) throw Error(ErrorKind::BadSubsystem, "no qubit " + std::to_string(which));
  ModelSpec local = field_only(spec);
  return Hamiltonian(single_qubit_field(spec.field_vector()), local);
}

bool h0_dominance_check(const DensityMatrix& rho, const Hamiltonian& h, const Hamiltonian& h0) {
  if (h.dim() != h0.dim() || rho.dim() != h.dim())
    throw Error(ErrorKind::DimensionMismatch, "state and Hamiltonians must share a dimension");
  return battery_capacity(rho, h) >= battery_capacity(rho, h0) - 1e-10;
}

}  // namespace qbcap
