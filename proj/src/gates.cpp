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

#include "qbcap/gates.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace qbcap {

PermutationGate PermutationGate::make(int i, int j) {
  if (i < 1 || j < 1 || i == j)
    throw Error(ErrorKind::IndexOutOfRange,
                "transposition needs distinct 1-based indices, got (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  if (i > j) std::swap(i, j);
  return {i, j};
}

std::string PermutationGate::name() const { return "U" + std::to_string(i) + std::to_string(j); }

namespace {

void check_range(const PermutationGate& g, std::size_t dim) {
  if (g.i < 1 || g.j <= g.i || static_cast<std::size_t>(g.j) > dim)
    throw Error(ErrorKind::IndexOutOfRange, g.name() + " does not act on dimension " + std::to_string(dim));
}

}  // namespace

ComplexMatrix materialize(const PermutationGate& g, std::size_t dim) {
  check_range(g, dim);
  ComplexMatrix u = ComplexMatrix::identity(dim);
  const std::size_t a = static_cast<std::size_t>(g.i - 1);
  const std::size_t b = static_cast<std::size_t>(g.j - 1);
  u(a, a) = 0.0;
  u(b, b) = 0.0;
  u(a, b) = 1.0;
  u(b, a) = 1.0;
  return u;
}

DensityMatrix apply_gate(const DensityMatrix& rho, const PermutationGate& g) {
  const std::size_t d = rho.dim();
  check_range(g, d);
  std::vector<std::size_t> p(d);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::swap(p[static_cast<std::size_t>(g.i - 1)], p[static_cast<std::size_t>(g.j - 1)]);
  ComplexMatrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out(r, c) = rho(p[r], p[c]);
  return DensityMatrix::unchecked(std::move(out));
}

DensityMatrix apply_gates(const DensityMatrix& rho, std::span<const PermutationGate> gates) {
  DensityMatrix out = rho;
  for (const auto& g : gates) out = apply_gate(out, g);
  return out;
}

std::vector<PermutationGate> all_transpositions(std::size_t dim) {
  std::vector<PermutationGate> out;
  for (int i = 1; i <= static_cast<int>(dim); ++i)
    for (int j = i + 1; j <= static_cast<int>(dim); ++j) out.push_back({i, j});
  return out;
}

bool matches_pattern(std::span<const double> diag, std::span<const int> order) {
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    if (diag[static_cast<std::size_t>(order[k] - 1)] < diag[static_cast<std::size_t>(order[k + 1] - 1)] - kOrderingTol)
      return false;
  }
  return true;
}

Reordering reorder_to_pattern(const DensityMatrix& rho, std::span<const int> order) {
  if (order.size() != rho.dim())
    throw Error(ErrorKind::LengthMismatch, "ordering pattern length does not match the state dimension");
  Reordering r{rho, {}};
  std::vector<double> diag = rho.diagonal();
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const auto at = [&](std::size_t m) { return static_cast<std::size_t>(order[m] - 1); };
    std::size_t best = k;
    for (std::size_t m = k + 1; m < order.size(); ++m)
      if (diag[at(m)] > diag[at(best)]) best = m;
    if (best == k || diag[at(k)] >= diag[at(best)] - kOrderingTol) continue;
    const PermutationGate g = PermutationGate::make(order[k], order[best]);
    std::swap(diag[at(k)], diag[at(best)]);
    r.state = apply_gate(r.state, g);
    r.gates.push_back(g);
  }
  return r;
}

}  // namespace qbcap
