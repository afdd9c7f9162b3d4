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

#include "qbcap/sampling.hpp"

#include <cmath>

namespace qbcap {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng make_rng(std::string_view stream, std::uint64_t seed, std::uint64_t index) {
  // FNV-1a over the stream name; std::hash is not stable across toolchains.
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : stream) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  const std::uint64_t k = splitmix64(splitmix64(h ^ seed) ^ index);
  std::seed_seq seq{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  return Rng(seq);
}

ComplexMatrix ginibre(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5));
  ComplexMatrix g(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const double re = n(rng);
      const double im = n(rng);
      g(r, c) = cplx(re, im);
    }
  return g;
}

DensityMatrix random_density_matrix(int qubits, Rng& rng) {
  if (qubits < 1 || qubits > 3) throw Error(ErrorKind::InvalidArgument, "qubits must be 1, 2 or 3");
  const ComplexMatrix g = ginibre(std::size_t{1} << qubits, rng);
  ComplexMatrix w = g * g.adjoint();
  w *= cplx(1.0 / w.trace().real());
  // Exact Hermitian symmetry; GG^dagger can differ from its adjoint in the last bit.
  const ComplexMatrix sym = (w + w.adjoint()) * cplx(0.5);
  return DensityMatrix::unchecked(sym);
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  if (dim != 2 && dim != 4 && dim != 8) throw Error(ErrorKind::InvalidArgument, "dim must be 2, 4 or 8");
  ComplexMatrix q = ginibre(dim, rng);
  // Modified Gram-Schmidt on columns. R's diagonal comes out real positive,
  // which is exactly the phase fix that makes Q Haar distributed.
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t p = 0; p < k; ++p) {
      cplx dot = 0.0;
      for (std::size_t r = 0; r < dim; ++r) dot += std::conj(q(r, p)) * q(r, k);
      for (std::size_t r = 0; r < dim; ++r) q(r, k) -= dot * q(r, p);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(q(r, k));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) q(r, k) /= norm;
  }
  return q;
}

ComplexMatrix random_local_unitary(Rng& rng) {
  auto su2 = [&] {
    ComplexMatrix u = random_unitary(2, rng);
    const cplx phase = std::sqrt(determinant(u));
    return u * (1.0 / phase);
  };
  const ComplexMatrix a = su2();
  const ComplexMatrix b = su2();
  return kron(a, b);
}

}  // namespace qbcap
