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

// Random states (Ginibre ensemble) and Haar unitaries.
//
// Every sample draws from its own std::mt19937_64 seeded with
// splitmix64(hash(stream name) ^ seed ^ index), so results do not depend on
// how samples are spread over threads.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "qbcap/linalg.hpp"

namespace qbcap {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED0B0CA9ULL;

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Generator for sample `index` of the named stream.
Rng make_rng(std::string_view stream, std::uint64_t seed, std::uint64_t index = 0);

/// d x d matrix of independent standard complex Gaussians (E|z|^2 = 1).
ComplexMatrix ginibre(std::size_t dim, Rng& rng);

/// G G^dagger / Tr(G G^dagger). Throws InvalidArgument unless qubits in {1, 2, 3}.
DensityMatrix random_density_matrix(int qubits, Rng& rng);

/// Haar unitary via Gram-Schmidt QR of a Ginibre matrix with R's diagonal
/// phases moved into Q. Throws InvalidArgument unless dim in {2, 4, 8}.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

/// V1 x V2 with V1, V2 Haar on SU(2).
ComplexMatrix random_local_unitary(Rng& rng);

}  // namespace qbcap
