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

#include "qbcap/capacity.hpp"

#include <cmath>
#include <string>

namespace qbcap {

double battery_capacity(const Spectrum& state, const Spectrum& energies) {
  if (state.size() != energies.size())
    throw Error(ErrorKind::LengthMismatch, "state and Hamiltonian spectra differ in length");
  const std::size_t d = state.size();
  double c = 0.0;
  for (std::size_t i = 0; i < d; ++i) c += energies[i] * (state[i] - state[d - 1 - i]);
  return c;
}

double battery_capacity(const DensityMatrix& rho, const Hamiltonian& h) {
  if (rho.dim() != h.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "state dim " + std::to_string(rho.dim()) + " vs Hamiltonian dim " + std::to_string(h.dim()));
  return battery_capacity(rho.spectrum(), h.spectrum());
}

namespace {

void require_qubits(const DensityMatrix& rho, const ModelSpec& spec) {
  if (rho.qubits() != spec.qubits)
    throw Error(ErrorKind::DimensionMismatch, "state has " + std::to_string(rho.qubits()) +
                                                  " qubits, model has " + std::to_string(spec.qubits));
}

// Local capacities of every qubit. All local Hamiltonians coincide.
std::vector<double> local_capacities(const DensityMatrix& rho, const Hamiltonian& local) {
  std::vector<double> out;
  for (int q = 0; q < rho.qubits(); ++q) out.push_back(battery_capacity(reduce(rho, q), local));
  return out;
}

double sum_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

double sub_capacity(const DensityMatrix& rho, const ModelSpec& spec) {
  require_qubits(rho, spec);
  return sum_of(local_capacities(rho, subsystem_hamiltonian(spec, 0)));
}

double sub_ic(const DensityMatrix& rho, const ModelSpec& spec) { return sub_capacity(dephase(rho), spec); }

CapacityBreakdown subsystem_capacities(const DensityMatrix& rho, const ModelSpec& spec) {
  return subsystem_capacities(rho, spec, build_hamiltonian(spec));
}

CapacityBreakdown subsystem_capacities(const DensityMatrix& rho, const ModelSpec& spec, const Hamiltonian& h) {
  require_qubits(rho, spec);
  const Hamiltonian local = subsystem_hamiltonian(spec, 0);
  const std::vector<double> subs = local_capacities(rho, local);

  CapacityBreakdown b;
  b.qubits = spec.qubits;
  b.total = battery_capacity(rho, h);
  b.sub_A = subs[0];
  b.sub_B = subs[1];
  if (subs.size() == 3) b.sub_C = subs[2];
  b.sub_sum = sum_of(subs);
  b.residual = b.total - b.sub_sum;
  b.sub_ic = sum_of(local_capacities(dephase(rho), local));
  b.sub_c = b.sub_sum - b.sub_ic;
  return b;
}

double residual_capacity(const DensityMatrix& rho, const ModelSpec& spec) {
  return subsystem_capacities(rho, spec).residual;
}

CoherenceSplit2Q coherence_split_2q(const DensityMatrix& rho) {
  if (rho.qubits() != 2) throw Error(ErrorKind::DimensionMismatch, "coherence_split_2q needs a two-qubit state");
  auto r = [&](int i, int j) { return rho(i - 1, j - 1); };
  auto p = [&](int i) { return rho(i - 1, i - 1).real(); };
  CoherenceSplit2Q s;
  s.c_A = 2.0 * std::abs(r(1, 3) + r(2, 4));
  s.c_B = 2.0 * std::abs(r(1, 2) + r(3, 4));
  s.c_star = 2.0 * std::abs(r(1, 4) + r(2, 3));
  s.ic_A = p(1) + p(2) - p(3) - p(4);
  s.ic_B = p(1) + p(3) - p(2) - p(4);
  return s;
}

double local_gap(const ModelSpec& spec) {
  const auto e = spec.field_vector();
  return 2.0 * std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
}

std::pair<double, double> closed_form_sub_capacity_2q(const DensityMatrix& rho, const ModelSpec& spec) {
  spec.validate();
  const CoherenceSplit2Q s = coherence_split_2q(rho);
  const double gap = local_gap(spec);
  return {gap * std::hypot(s.c_A, s.ic_A), gap * std::hypot(s.c_B, s.ic_B)};
}

}  // namespace qbcap
