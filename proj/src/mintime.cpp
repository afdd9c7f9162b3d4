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

#include "qbcap/mintime.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qbcap/hamiltonians.hpp"

namespace qbcap {

ComplexMatrix magic_basis() {
  const double s = 1.0 / std::numbers::sqrt2;
  const cplx i(0.0, 1.0);
  ComplexMatrix o{{1.0, 0.0, 0.0, i}, {0.0, i, 1.0, 0.0}, {0.0, i, -1.0, 0.0}, {1.0, 0.0, 0.0, -i}};
  return o * cplx(s);
}

LocalInvariants local_invariants(const ComplexMatrix& u) {
  if (u.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "local invariants need a 4x4 unitary");
  if (!is_unitary(u)) throw Error(ErrorKind::NotUnitary, "input is not unitary within 1e-10");
  const ComplexMatrix o = magic_basis();
  const ComplexMatrix ub = o.adjoint() * u * o;
  const ComplexMatrix up = ub.transpose() * ub;
  const cplx det = determinant(u);
  const cplx tr = up.trace();
  const cplx tr2 = (up * up).trace();
  const cplx chi2 = (tr * tr - tr2) / (4.0 * det);
  if (std::abs(chi2.imag()) > 1e-9) throw Error(ErrorKind::InvalidArgument, "chi2 is not real within 1e-9");
  return {tr * tr / (16.0 * det), chi2.real()};
}

LocalInvariants invariants_from_coordinates(const CartanCoordinates& c) {
  const double c1 = std::cos(c.a1), c2 = std::cos(c.a2), c3 = std::cos(c.a3);
  const double s1 = std::sin(c.a1), s2 = std::sin(c.a2), s3 = std::sin(c.a3);
  const double cc = c1 * c1 * c2 * c2 * c3 * c3;
  const double ss = s1 * s1 * s2 * s2 * s3 * s3;
  const double w1 = cc - ss;
  const double w2 = 0.25 * std::sin(2 * c.a1) * std::sin(2 * c.a2) * std::sin(2 * c.a3);
  const double w3 = 4 * cc - 4 * ss - std::cos(2 * c.a1) * std::cos(2 * c.a2) * std::cos(2 * c.a3);
  return {cplx(w1, w2), w3};
}

ComplexMatrix canonical_gate(const CartanCoordinates& c) {
  // The three terms commute and each squares to the identity.
  const ComplexMatrix id = ComplexMatrix::identity(4);
  const cplx i(0.0, 1.0);
  auto factor = [&](const ComplexMatrix& p, double a) {
    return id * cplx(std::cos(a / 2)) + p * (i * std::sin(a / 2));
  };
  return factor(kron(pauli::x(), pauli::x()), c.a1) * factor(kron(pauli::y(), pauli::y()), c.a2) *
         factor(kron(pauli::z(), pauli::z()), c.a3);
}

CartanCoordinates protocol_gate_coordinates(const PermutationGate& g) {
  const double h = std::numbers::pi / 2;
  const std::string n = g.name();
  if (n == "U14" || n == "U23") return {h, h, h};
  if (n == "U12" || n == "U34" || n == "U13" || n == "U24") return {h, 0.0, 0.0};
  throw Error(ErrorKind::UnsupportedGate, n + " is not a two-qubit protocol gate");
}

GateTime protocol_gate_time(const PermutationGate& g, double J) {
  const CartanCoordinates c = protocol_gate_coordinates(g);
  if (!(J > 0.0)) throw Error(ErrorKind::NonPositiveCoupling, "gate time needs J > 0");
  return {g, J, c, c.sum() / J};
}

namespace {

struct Named {
  std::string name;
  ComplexMatrix op;
};

std::vector<Named> pauli_set() {
  return {{"x", pauli::x()}, {"y", pauli::y()}, {"z", pauli::z()}};
}

std::vector<Named> l_basis() {
  std::vector<Named> out;
  for (const auto& p : pauli_set()) out.push_back({"s" + p.name + "1", kron(p.op, pauli::i2())});
  for (const auto& p : pauli_set()) out.push_back({"s" + p.name + "2", kron(pauli::i2(), p.op)});
  return out;
}

std::vector<Named> m_basis() {
  std::vector<Named> out;
  for (const auto& a : pauli_set())
    for (const auto& b : pauli_set()) out.push_back({"s" + a.name + "1s" + b.name + "2", kron(a.op, b.op)});
  return out;
}

// Distance from `x` to span(basis); Pauli strings are orthogonal under the
// Hilbert-Schmidt product with norm^2 = 4.
double residual_outside(const ComplexMatrix& x, const std::vector<Named>& basis) {
  ComplexMatrix rest = x;
  for (const auto& b : basis) {
    const cplx coef = (b.op.adjoint() * x).trace() / 4.0;
    rest -= b.op * coef;
  }
  return frobenius_norm(rest);
}

}  // namespace

std::vector<AlgebraCheck> cartan_algebra_checks() {
  const auto l = l_basis();
  const auto m = m_basis();
  std::vector<AlgebraCheck> out;
  auto run = [&](const char* rel, const std::vector<Named>& a, const std::vector<Named>& b,
                 const std::vector<Named>& target) {
    for (const auto& x : a)
      for (const auto& y : b)
        out.push_back({rel, "[" + x.name + "," + y.name + "]", residual_outside(commutator(x.op, y.op), target)});
  };
  run("[m,m] in l", m, m, l);
  run("[m,l] in m", m, l, m);
  run("[l,l] in l", l, l, l);
  return out;
}

}  // namespace qbcap
