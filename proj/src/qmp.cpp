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

#include "qbcap/qmp.hpp"

#include <algorithm>
#include <cmath>

namespace qbcap {

bool QmpReport::ok() const noexcept {
  return std::all_of(inequalities.begin(), inequalities.end(), [](const auto& r) { return r.satisfied(); });
}

std::vector<InequalityResult> QmpReport::violations() const {
  std::vector<InequalityResult> out;
  for (const auto& r : inequalities)
    if (!r.satisfied()) out.push_back(r);
  return out;
}

namespace {

void require_sizes(const MarginalScenario2Q& s) {
  if (s.global.size() != 4 || s.local_A.size() != 2 || s.local_B.size() != 2)
    throw Error(ErrorKind::LengthMismatch, "two-qubit scenario needs 4 global and 2+2 local eigenvalues");
}

}  // namespace

QmpReport check_2q(const MarginalScenario2Q& s) {
  require_sizes(s);
  const auto& l = s.global.values;
  const double a0 = s.local_A[0];
  const double b0 = s.local_B[0];
  QmpReport r;
  r.inequalities.push_back({"lambda0_A >= l0+l1", a0 - (l[0] + l[1])});
  r.inequalities.push_back({"lambda0_B >= l0+l1", b0 - (l[0] + l[1])});
  r.inequalities.push_back({"lambda0_A+lambda0_B >= 2l0+l1+l2", a0 + b0 - (2 * l[0] + l[1] + l[2])});
  r.inequalities.push_back(
      {"|lambda0_A-lambda0_B| <= min(l3-l1, l2-l0)", std::min(l[3] - l[1], l[2] - l[0]) - std::abs(a0 - b0)});
  return r;
}

QmpReport check_2q_implied(const MarginalScenario2Q& s) {
  require_sizes(s);
  const auto& l = s.global.values;
  const double a1 = s.local_A[1];
  const double b1 = s.local_B[1];
  QmpReport r;
  r.inequalities.push_back({"lambda1_A <= l2+l3", l[2] + l[3] - a1});
  r.inequalities.push_back({"lambda1_B <= l2+l3", l[2] + l[3] - b1});
  r.inequalities.push_back({"lambda1_A+lambda1_B <= 2l3+l1+l2", 2 * l[3] + l[1] + l[2] - a1 - b1});
  return r;
}

QmpReport check_3q(const MarginalScenario3Q& s) {
  if (s.global.size() != 8) throw Error(ErrorKind::LengthMismatch, "three-qubit scenario needs 8 global eigenvalues");
  // 1-based to match the usual l1 <= ... <= l8 labelling.
  auto L = [&](int k) { return s.global[static_cast<std::size_t>(k - 1)]; };
  const double d1 = s.deltas[0], d2 = s.deltas[1], d3 = s.deltas[2];

  struct Row {
    const char* id;
    double lhs;
    double rhs;
  };
  const Row rows[] = {
      {"d3 <= l8+l7+l6+l5-l4-l3-l2-l1", d3, L(8) + L(7) + L(6) + L(5) - L(4) - L(3) - L(2) - L(1)},
      {"d2+d3 <= 2l8+2l7-2l2-2l1", d2 + d3, 2 * L(8) + 2 * L(7) - 2 * L(2) - 2 * L(1)},
      {"d1+d2+d3 <= 3l8+l7+l6+l5-l4-l3-l2-3l1", d1 + d2 + d3,
       3 * L(8) + L(7) + L(6) + L(5) - L(4) - L(3) - L(2) - 3 * L(1)},
      {"-d1+d2+d3 <= l8+3l7+l6+l5-l4-l3-l2-3l1", -d1 + d2 + d3,
       L(8) + 3 * L(7) + L(6) + L(5) - L(4) - L(3) - L(2) - 3 * L(1)},
      {"-d1+d2+d3 <= 3l8+l7+l6+l5-l4-l3-3l2-l1", -d1 + d2 + d3,
       3 * L(8) + L(7) + L(6) + L(5) - L(4) - L(3) - 3 * L(2) - L(1)},
      {"d1+d2+2d3 <= 4l8+2l7+2l6-2l3-2l2-4l1", d1 + d2 + 2 * d3,
       4 * L(8) + 2 * L(7) + 2 * L(6) - 2 * L(3) - 2 * L(2) - 4 * L(1)},
      {"-d1+d2+2d3 <= 2l8+4l7+2l6-2l3-2l2-4l1", -d1 + d2 + 2 * d3,
       2 * L(8) + 4 * L(7) + 2 * L(6) - 2 * L(3) - 2 * L(2) - 4 * L(1)},
      {"-d1+d2+2d3 <= 4l8+2l7+2l5-2l3-2l2-4l1", -d1 + d2 + 2 * d3,
       4 * L(8) + 2 * L(7) + 2 * L(5) - 2 * L(3) - 2 * L(2) - 4 * L(1)},
      {"-d1+d2+2d3 <= 4l8+2l7+2l6-2l4-2l2-4l1", -d1 + d2 + 2 * d3,
       4 * L(8) + 2 * L(7) + 2 * L(6) - 2 * L(4) - 2 * L(2) - 4 * L(1)},
      {"-d1+d2+2d3 <= 4l8+2l7+2l6-2l3-4l2-2l1", -d1 + d2 + 2 * d3,
       4 * L(8) + 2 * L(7) + 2 * L(6) - 2 * L(3) - 4 * L(2) - 2 * L(1)},
  };
  QmpReport r;
  for (const Row& row : rows) r.inequalities.push_back({row.id, row.rhs - row.lhs});
  return r;
}

MarginalScenario2Q marginal_scenario_2q(const DensityMatrix& rho) {
  if (rho.qubits() != 2) throw Error(ErrorKind::DimensionMismatch, "expected a two-qubit state");
  return {rho.spectrum(), reduce(rho, 0).spectrum(), reduce(rho, 1).spectrum()};
}

MarginalScenario3Q marginal_scenario_3q(const DensityMatrix& rho) {
  if (rho.qubits() != 3) throw Error(ErrorKind::DimensionMismatch, "expected a three-qubit state");
  MarginalScenario3Q s;
  s.global = rho.spectrum();
  for (int q = 0; q < 3; ++q) {
    const Spectrum loc = reduce(rho, q).spectrum();
    s.deltas[static_cast<std::size_t>(q)] = loc[1] - loc[0];
  }
  std::sort(s.deltas.begin(), s.deltas.end());
  return s;
}

QmpReport check_state(const DensityMatrix& rho) {
  if (rho.qubits() == 2) {
    const auto s = marginal_scenario_2q(rho);
    QmpReport r = check_2q(s);
    const QmpReport implied = check_2q_implied(s);
    r.inequalities.insert(r.inequalities.end(), implied.inequalities.begin(), implied.inequalities.end());
    return r;
  }
  return check_3q(marginal_scenario_3q(rho));
}

}  // namespace qbcap
