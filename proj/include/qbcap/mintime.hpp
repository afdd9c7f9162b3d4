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

// Local invariants of two-qubit gates and minimal gate times under an
// Ising/XXZ drift with coupling J, for the canonical form
//
//   U = k1 exp{(i/2)(a1 sx sx + a2 sy sy + a3 sz sz)} k2,   t* = (a1 + a2 + a3) / J.

#pragma once

#include <string>
#include <vector>

#include "qbcap/gates.hpp"
#include "qbcap/linalg.hpp"

namespace qbcap {

struct LocalInvariants {
  cplx chi1;
  double chi2 = 0.0;
};

struct CartanCoordinates {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double sum() const noexcept { return a1 + a2 + a3; }
};

struct GateTime {
  PermutationGate gate;
  double J = 1.0;
  CartanCoordinates coords;
  double t_star = 0.0;
};

/// Fixed magic-basis matrix O.
ComplexMatrix magic_basis();

/// chi1 = Tr(U')^2 / (16 det U), chi2 = (Tr(U')^2 - Tr(U'^2)) / (4 det U)
/// with U' = (O^dagger U O)^T (O^dagger U O). Throws NotUnitary, and
/// InvalidArgument if chi2 has an imaginary part above 1e-9.
LocalInvariants local_invariants(const ComplexMatrix& u);

/// chi1 = w1 + i w2, chi2 = w3 from the Cartan coordinates.
LocalInvariants invariants_from_coordinates(const CartanCoordinates& c);

/// exp{(i/2)(a1 sx sx + a2 sy sy + a3 sz sz)}.
ComplexMatrix canonical_gate(const CartanCoordinates& c);

/// Closed-form coordinates for U14, U23, U12, U34, U13, U24.
/// Throws UnsupportedGate otherwise.
CartanCoordinates protocol_gate_coordinates(const PermutationGate& g);

/// Throws UnsupportedGate, and NonPositiveCoupling for J <= 0.
GateTime protocol_gate_time(const PermutationGate& g, double J);

struct AlgebraCheck {
  std::string relation;  ///< "[m,m] in l", ...
  std::string lhs;
  double residual = 0.0;
};

/// Projects every commutator of the basis {s_i x I, I x s_j} (l) and
/// {s_i x s_j} (m) onto the asserted subspace and reports the residual.
std::vector<AlgebraCheck> cartan_algebra_checks();

}  // namespace qbcap
