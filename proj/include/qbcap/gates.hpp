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

// Transposition gates U_ij: the identity with rows i and j exchanged.
// Indices are 1-based to match the usual rho_ij labelling.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "qbcap/linalg.hpp"

namespace qbcap {

struct PermutationGate {
  int i = 1;
  int j = 2;

  /// Normalises to i < j; throws IndexOutOfRange unless 1 <= i != j.
  static PermutationGate make(int i, int j);

  std::string name() const;  ///< "U12"
  bool operator==(const PermutationGate&) const = default;
};

/// Throws IndexOutOfRange if j > dim.
ComplexMatrix materialize(const PermutationGate& g, std::size_t dim);

/// U rho U^dagger, computed as an exact index permutation.
DensityMatrix apply_gate(const DensityMatrix& rho, const PermutationGate& g);
DensityMatrix apply_gates(const DensityMatrix& rho, std::span<const PermutationGate> gates);

/// All transpositions U_ij with 1 <= i < j <= dim, in lexicographic order.
std::vector<PermutationGate> all_transpositions(std::size_t dim);

/// Tie tolerance for diagonal ordering comparisons.
inline constexpr double kOrderingTol = 1e-12;

/// `order` lists 1-based positions from largest to smallest population.
/// True iff diag[order[k]] >= diag[order[k+1]] - kOrderingTol for all k.
bool matches_pattern(std::span<const double> diag, std::span<const int> order);

struct Reordering {
  DensityMatrix state;
  std::vector<PermutationGate> gates;
};

/// Selection sort over `order`: position order[k] receives the k-th largest
/// population. A swap is skipped when the current entry already equals the
/// remaining maximum within kOrderingTol, so at most dim - 1 gates are emitted.
Reordering reorder_to_pattern(const DensityMatrix& rho, std::span<const int> order);

}  // namespace qbcap
