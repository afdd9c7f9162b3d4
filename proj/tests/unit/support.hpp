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


// Test-only helpers and independent oracles.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "qbcap/linalg.hpp"
#include "qbcap/sampling.hpp"

namespace qbcap::testing {

inline DensityMatrix random_state(int qubits, std::uint64_t index, std::string_view stream = "unit") {
  Rng rng = make_rng(stream, 42, index);
  return random_density_matrix(qubits, rng);
}

// max - min energy over the unitary orbit, from sorted eigenvalue lists.
inline double orbit_width(std::vector<double> lambda, std::vector<double> eps) {
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  std::sort(eps.begin(), eps.end(), std::greater<>());
  double hi = 0.0, lo = 0.0;
  const std::size_t d = lambda.size();
  for (std::size_t k = 0; k < d; ++k) {
    hi += lambda[k] * eps[k];
    lo += lambda[k] * eps[d - 1 - k];
  }
  return hi - lo;
}

inline DensityMatrix diag_state(std::vector<double> p) { return DensityMatrix(ComplexMatrix::diagonal(p)); }

// Entry of a density matrix with 1-based labels.
inline cplx at(const DensityMatrix& r, int i, int j) {
  return r(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
}

}  // namespace qbcap::testing
