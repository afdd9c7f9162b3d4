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

#include "qbcap/protocol3.hpp"

#include <algorithm>
#include <cmath>

namespace qbcap {

namespace {

void require_three_qubits(const DensityMatrix& rho) {
  if (rho.qubits() != 3) throw Error(ErrorKind::DimensionMismatch, "expected a three-qubit state");
}

// Entry rho_ij (1-based), optionally conjugated.
struct Term {
  int i;
  int j;
  bool conj = false;
};

using Cell = std::array<Term, 4>;

struct TableRow {
  PermutationGate gate;
  std::array<Cell, 3> cells;  // C_A, C_B, C_C
};

const std::array<TableRow, 12>& table1() {
  static const std::array<TableRow, 12> rows{{
      {{1, 2}, {{{{{2, 5}, {1, 6}, {3, 7}, {4, 8}}}, {{{2, 3}, {1, 4}, {5, 7}, {6, 8}}},
                 {{{1, 2, true}, {3, 4}, {5, 6}, {7, 8}}}}}},
      {{3, 4}, {{{{{1, 5}, {2, 6}, {4, 7}, {3, 8}}}, {{{1, 4}, {2, 3}, {5, 7}, {6, 8}}},
                 {{{1, 2}, {3, 4, true}, {5, 6}, {7, 8}}}}}},
      {{5, 6}, {{{{{1, 6}, {2, 5}, {3, 7}, {4, 8}}}, {{{1, 3}, {2, 4}, {6, 7}, {5, 8}}},
                 {{{1, 2}, {3, 4}, {5, 6, true}, {7, 8}}}}}},
      {{7, 8}, {{{{{1, 5}, {2, 6}, {3, 8}, {4, 7}}}, {{{1, 3}, {2, 4}, {5, 8}, {6, 7}}},
                 {{{1, 2}, {3, 4}, {5, 6}, {7, 8, true}}}}}},
      {{1, 3}, {{{{{3, 5}, {2, 6}, {1, 7}, {4, 8}}}, {{{1, 3, true}, {2, 4}, {5, 7}, {6, 8}}},
                 {{{2, 3, true}, {1, 4}, {5, 6}, {7, 8}}}}}},
      {{2, 4}, {{{{{1, 5}, {4, 6}, {3, 7}, {2, 8}}}, {{{1, 3}, {2, 4, true}, {5, 7}, {6, 8}}},
                 {{{1, 4}, {2, 3, true}, {5, 6}, {7, 8}}}}}},
      {{5, 7}, {{{{{1, 7}, {2, 6}, {3, 5}, {4, 8}}}, {{{1, 3}, {2, 4}, {5, 7, true}, {6, 8}}},
                 {{{1, 2}, {3, 4}, {6, 7, true}, {5, 8}}}}}},
      {{6, 8}, {{{{{1, 5}, {2, 8}, {3, 7}, {4, 6}}}, {{{1, 3}, {2, 4}, {5, 7}, {6, 8, true}}},
                 {{{1, 2}, {3, 4}, {5, 8}, {6, 7, true}}}}}},
      {{1, 5}, {{{{{1, 5, true}, {2, 6}, {3, 7}, {4, 8}}}, {{{3, 5, true}, {2, 4}, {1, 7}, {6, 8}}},
                 {{{2, 5, true}, {3, 4}, {1, 6}, {7, 8}}}}}},
      {{2, 6}, {{{{{1, 5}, {2, 6, true}, {3, 7}, {4, 8}}}, {{{1, 3}, {4, 6, true}, {5, 7}, {2, 8}}},
                 {{{1, 6}, {3, 4}, {2, 5, true}, {7, 8}}}}}},
      {{3, 7}, {{{{{1, 5}, {2, 6}, {3, 7, true}, {4, 8}}}, {{{1, 7}, {2, 4}, {3, 5, true}, {6, 8}}},
                 {{{1, 2}, {4, 7, true}, {5, 6}, {3, 8}}}}}},
      {{4, 8}, {{{{{1, 5}, {2, 6}, {3, 7}, {4, 8, true}}}, {{{1, 3}, {2, 8}, {5, 7}, {4, 6, true}}},
                 {{{1, 2}, {3, 8}, {5, 6}, {4, 7, true}}}}}},
  }};
  return rows;
}

const TableRow& table_row(const PermutationGate& g) {
  for (const auto& row : table1())
    if (row.gate == g) return row;
  throw Error(ErrorKind::UnsupportedGate, g.name() + " is not one of the twelve tabulated gates");
}

// Pattern 1 of each family; pattern p is pattern 1 with every index relabelled
// by XOR with (p - 1) on the zero-based value.
constexpr std::array<std::array<int, 8>, 6> kPattern1{{
    {1, 2, 3, 4, 5, 6, 7, 8},
    {1, 3, 2, 4, 5, 7, 6, 8},
    {1, 2, 5, 6, 3, 4, 7, 8},
    {1, 3, 5, 7, 2, 4, 6, 8},
    {1, 5, 2, 6, 3, 7, 4, 8},
    {1, 5, 3, 7, 2, 6, 4, 8},
}};

}  // namespace

CoherenceSplit3Q coherence_split_3q(const DensityMatrix& rho) {
  require_three_qubits(rho);
  auto r = [&](int i, int j) { return rho(i - 1, j - 1); };
  auto p = [&](int i) { return rho(i - 1, i - 1).real(); };
  CoherenceSplit3Q s;
  s.c_A = 2.0 * std::abs(r(1, 5) + r(2, 6) + r(3, 7) + r(4, 8));
  s.c_B = 2.0 * std::abs(r(1, 3) + r(2, 4) + r(5, 7) + r(6, 8));
  s.c_C = 2.0 * std::abs(r(1, 2) + r(3, 4) + r(5, 6) + r(7, 8));
  s.ic_A = p(1) + p(2) + p(3) + p(4) - p(5) - p(6) - p(7) - p(8);
  s.ic_B = p(1) + p(2) + p(5) + p(6) - p(3) - p(4) - p(7) - p(8);
  s.ic_C = p(1) + p(3) + p(5) + p(7) - p(2) - p(4) - p(6) - p(8);
  return s;
}

std::array<double, 3> closed_form_sub_capacity_3q(const DensityMatrix& rho, const ModelSpec& spec) {
  spec.validate();
  const CoherenceSplit3Q s = coherence_split_3q(rho);
  const double gap = local_gap(spec);
  return {gap * std::hypot(s.c_A, s.ic_A), gap * std::hypot(s.c_B, s.ic_B), gap * std::hypot(s.c_C, s.ic_C)};
}

const std::array<PermutationGate, 12>& table1_gates() {
  static const std::array<PermutationGate, 12> gates = [] {
    std::array<PermutationGate, 12> g{};
    for (std::size_t k = 0; k < 12; ++k) g[k] = table1()[k].gate;
    return g;
  }();
  return gates;
}

CoherenceSplit3Q table1_action(const DensityMatrix& rho, const PermutationGate& g) {
  require_three_qubits(rho);
  table_row(g);
  return coherence_split_3q(apply_gate(rho, g));
}

std::array<double, 3> table1_formula(const DensityMatrix& rho, const PermutationGate& g) {
  require_three_qubits(rho);
  const TableRow& row = table_row(g);
  std::array<double, 3> out{};
  for (std::size_t c = 0; c < 3; ++c) {
    cplx sum = 0.0;
    for (const Term& t : row.cells[c]) {
      const cplx v = rho(static_cast<std::size_t>(t.i - 1), static_cast<std::size_t>(t.j - 1));
      sum += t.conj ? std::conj(v) : v;
    }
    out[c] = 2.0 * std::abs(sum);
  }
  return out;
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::ABC: return "ABC";
    case Family::ACB: return "ACB";
    case Family::BAC: return "BAC";
    case Family::BCA: return "BCA";
    case Family::CAB: return "CAB";
    case Family::CBA: return "CBA";
  }
  return "unknown";
}

std::array<int, 8> ordering_pattern_3q(OrderingFamily f) {
  if (f.pattern_index < 1 || f.pattern_index > 8)
    throw Error(ErrorKind::IndexOutOfRange, "pattern index must be in 1..8");
  const auto& base = kPattern1[static_cast<std::size_t>(f.family)];
  std::array<int, 8> out{};
  for (std::size_t k = 0; k < 8; ++k) out[k] = ((base[k] - 1) ^ (f.pattern_index - 1)) + 1;
  return out;
}

std::optional<OrderingFamily> detect_ordering_3q(const DensityMatrix& rho) {
  require_three_qubits(rho);
  const std::vector<double> diag = rho.diagonal();
  for (Family fam : kFamilies)
    for (int p = 1; p <= 8; ++p) {
      const OrderingFamily f{fam, p};
      if (matches_pattern(diag, ordering_pattern_3q(f))) return f;
    }
  return std::nullopt;
}

std::array<PermutationGate, 4> step3_gates(Family f) {
  switch (f) {
    case Family::ABC:
    case Family::BAC:
      return {{{1, 2}, {3, 4}, {5, 6}, {7, 8}}};
    case Family::ACB:
    case Family::CAB:
      return {{{1, 3}, {2, 4}, {5, 7}, {6, 8}}};
    case Family::BCA:
    case Family::CBA:
      return {{{1, 5}, {2, 6}, {3, 7}, {4, 8}}};
  }
  return {};
}

ProtocolReport run_protocol_3q(const DensityMatrix& rho, const ModelSpec& spec) {
  require_three_qubits(rho);
  if (spec.qubits != 3) throw Error(ErrorKind::BadSpec, "run_protocol_3q needs a three-qubit model");
  const Hamiltonian h = build_hamiltonian(spec);
  ProtocolReport rep;
  rep.qubits = 3;
  if (!h0_dominance_check(rho, h, build_h0(field_only(spec))))
    rep.warnings.push_back("C(rho;H) < C(rho;H0): the trade-off bound is not guaranteed for this model");

  const CapacityBreakdown b = subsystem_capacities(rho, spec, h);
  rep.total = b.total;
  rep.initial_residual = b.residual;
  rep.c1 = rep.c2 = rep.c3 = b.sub_sum;
  rep.reordered_state = rep.step3_state = rep.final_state = rho.matrix();

  if (b.residual <= kGainTol) {
    rep.verdict = Verdict::AlreadyTight;
    rep.final_residual = b.residual;
    return rep;
  }

  // Step 2: keep a matching ordering, else reorder to the family with the
  // largest incoherent part.
  DensityMatrix current = rho;
  Family family = Family::ABC;
  if (const auto found = detect_ordering_3q(rho)) {
    family = found->family;
  } else {
    std::optional<Reordering> best;
    double best_ic = 0.0;
    for (Family fam : kFamilies) {
      Reordering r = reorder_to_pattern(rho, ordering_pattern_3q({fam, 1}));
      const double ic = sub_ic(r.state, spec);
      if (!best || ic > best_ic) {
        best = std::move(r);
        best_ic = ic;
        family = fam;
      }
    }
    rep.reordered = true;
    rep.reorder_gates = best->gates;
    current = best->state;
    rep.c2 = sub_capacity(current, spec);
  }
  rep.family = to_string(family);
  rep.target = rep.family;
  rep.reordered_state = current.matrix();

  // Step 3: the four family gates, each applied to the reordered state.
  rep.c3 = rep.c2;
  std::optional<DensityMatrix> step3;
  for (const PermutationGate& g : step3_gates(family)) {
    DensityMatrix trial = apply_gate(current, g);
    const double c = sub_capacity(trial, spec);
    rep.candidates.push_back({g, c});
    if (!rep.step3_gate || c > rep.c3) {
      rep.c3 = c;
      rep.step3_gate = g;
      step3 = std::move(trial);
    }
  }
  rep.step3_case = Step3Case::None;
  rep.step3_state = step3->matrix();

  // Step 4.
  double best = rep.c1;
  if (rep.c2 > best + kGainTol) {
    best = rep.c2;
    rep.gates_applied = rep.reorder_gates;
    rep.final_state = rep.reordered_state;
  }
  if (rep.c3 > best + kGainTol) {
    best = rep.c3;
    rep.gates_applied = rep.reorder_gates;
    rep.gates_applied.push_back(*rep.step3_gate);
    rep.final_state = rep.step3_state;
  }
  const double top = std::max({rep.c1, rep.c2, rep.c3});
  rep.verdict = top > rep.c1 + kGainTol ? Verdict::Gain : Verdict::NoGain;
  rep.final_residual = rep.total - best;
  return rep;
}

GainCondition theorem4_condition(const DensityMatrix& rho, const ComplexMatrix& u, const ModelSpec& spec) {
  require_three_qubits(rho);
  return gain_condition(rho, u, spec);
}

}  // namespace qbcap
