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


#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qbcap/hamiltonians.hpp"
#include "qbcap/mintime.hpp"
#include "qbcap/sampling.hpp"

using namespace qbcap;
using std::numbers::pi;

namespace {

void check_invariants(const LocalInvariants& got, cplx chi1, double chi2, double tol) {
  CHECK(std::abs(got.chi1.real() - chi1.real()) < tol);
  CHECK(std::abs(got.chi1.imag() - chi1.imag()) < tol);
  CHECK(std::abs(got.chi2 - chi2) < tol);
}

const PermutationGate kProtocolGates[] = {{1, 4}, {2, 3}, {1, 2}, {3, 4}, {1, 3}, {2, 4}};

}  // namespace

TEST_CASE("invariants of the protocol gates") {
  check_invariants(local_invariants(materialize({1, 4}, 4)), -1.0, -3.0, 1e-10);
  check_invariants(local_invariants(materialize({2, 3}, 4)), -1.0, -3.0, 1e-10);
  for (const PermutationGate g : {PermutationGate{1, 2}, PermutationGate{3, 4}, PermutationGate{1, 3}, PermutationGate{2, 4}})
    check_invariants(local_invariants(materialize(g, 4)), 0.0, 1.0, 1e-10);
  check_invariants(local_invariants(ComplexMatrix::identity(4)), 1.0, 3.0, 1e-12);
}

TEST_CASE("invariants from coordinates") {
  check_invariants(invariants_from_coordinates({pi / 2, pi / 2, pi / 2}), -1.0, -3.0, 1e-12);
  check_invariants(invariants_from_coordinates({pi / 2, 0, 0}), 0.0, 1.0, 1e-12);
  check_invariants(invariants_from_coordinates({0, 0, 0}), 1.0, 3.0, 1e-15);
}

TEST_CASE("canonical gates reproduce their coordinate invariants") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = make_rng("cartan", 1, i);
    std::uniform_real_distribution<double> u(-pi, pi);
    const CartanCoordinates c{u(rng), u(rng), u(rng)};
    const ComplexMatrix g = canonical_gate(c);
    CHECK(is_unitary(g, 1e-12));
    const LocalInvariants want = invariants_from_coordinates(c);
    check_invariants(local_invariants(g), want.chi1, want.chi2, 1e-10);
  }
}

TEST_CASE("canonical gate is the exponential of the Pauli sum") {
  const CartanCoordinates c{0.3, -1.1, 0.7};
  const ComplexMatrix xx = kron(pauli::x(), pauli::x());
  const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  const ComplexMatrix zz = kron(pauli::z(), pauli::z());
  const ComplexMatrix gen = (xx * cplx(c.a1) + yy * cplx(c.a2) + zz * cplx(c.a3)) * cplx(0.5);
  // Hermitian generator: exp(i G) through its eigendecomposition.
  const EigenDecomposition e = hermitian_eigen(gen);
  ComplexMatrix phase(4);
  for (std::size_t k = 0; k < 4; ++k) phase(k, k) = std::exp(cplx(0.0, e.spectrum[k]));
  const ComplexMatrix expected = e.vectors * phase * e.vectors.adjoint();
  CHECK(max_abs_diff(canonical_gate(c), expected) < 1e-12);
}

TEST_CASE("local equivalence") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = make_rng("local-eq", 2, i);
    const ComplexMatrix u = random_unitary(4, rng);
    const ComplexMatrix v1 = random_local_unitary(rng);
    const ComplexMatrix v2 = random_local_unitary(rng);
    const LocalInvariants a = local_invariants(u);
    const LocalInvariants b = local_invariants(v1 * u * v2);
    check_invariants(b, a.chi1, a.chi2, 1e-9);
    const LocalInvariants p = local_invariants(v1 * materialize({1, 3}, 4) * v2);
    check_invariants(p, 0.0, 1.0, 1e-9);
  }
}

TEST_CASE("global phase does not matter") {
  Rng rng = make_rng("phase", 3);
  const ComplexMatrix u = random_unitary(4, rng);
  const LocalInvariants a = local_invariants(u);
  const LocalInvariants b = local_invariants(u * std::exp(cplx(0.0, 0.77)));
  check_invariants(b, a.chi1, a.chi2, 1e-10);
}

TEST_CASE("gate times") {
  CHECK(std::abs(protocol_gate_time({1, 4}, 1.0).t_star - 3 * pi / 2) < 1e-12);
  CHECK(std::abs(protocol_gate_time({1, 3}, 2.0).t_star - pi / 4) < 1e-12);
  CHECK(std::abs(protocol_gate_time({2, 3}, 0.5).t_star - 3 * pi) < 1e-12);
  for (const PermutationGate g : kProtocolGates) {
    const GateTime t = protocol_gate_time(g, 1.7);
    CHECK(std::abs(t.t_star - t.coords.sum() / 1.7) < 1e-15);
    const LocalInvariants want = invariants_from_coordinates(t.coords);
    check_invariants(local_invariants(materialize(g, 4)), want.chi1, want.chi2, 1e-10);
  }
  CHECK_THROWS_AS(protocol_gate_time({1, 4}, 0.0), Error);
  CHECK_THROWS_AS(protocol_gate_time({1, 4}, -1.0), Error);
  CHECK_THROWS_AS(protocol_gate_coordinates({1, 5}), Error);
  try {
    protocol_gate_time({5, 6}, 0.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedGate);
  }
}

TEST_CASE("chi2 is real") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = make_rng("chi2", 4, i);
    CHECK_NOTHROW(local_invariants(random_unitary(4, rng)));
  }
  CHECK_THROWS_AS(local_invariants(ComplexMatrix::identity(4) * cplx(2.0)), Error);
  CHECK_THROWS_AS(local_invariants(ComplexMatrix::identity(8)), Error);
}

TEST_CASE("Cartan closure relations") {
  const auto checks = cartan_algebra_checks();
  CHECK(checks.size() >= 3);
  for (const AlgebraCheck& c : checks) {
    INFO(c.relation << " " << c.lhs);
    CHECK(c.residual <= 1e-12);
  }
  // [sx sx, sy sy] vanishes, so it lies in l trivially; [sx, sy] = 2i sz.
  const ComplexMatrix xx = kron(pauli::x(), pauli::x());
  const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  CHECK(frobenius_norm(commutator(xx, yy)) < 1e-15);
  CHECK(max_abs_diff(commutator(pauli::x(), pauli::y()), pauli::z() * cplx(0.0, 2.0)) < 1e-15);
}
