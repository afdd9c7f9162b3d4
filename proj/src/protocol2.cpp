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

#include "qbcap/protocol2.hpp"

#include <algorithm>
#include <cmath>

namespace qbcap {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::AlreadyTight: return "AlreadyTight";
    case Verdict::Gain: return "Gain";
    case Verdict::NoGain: return "NoGain";
  }
  return "unknown";
}

std::string_view to_string(Step3Case c) noexcept {
  switch (c) {
    case Step3Case::None: return "none";
    case Step3Case::KeepCStar: return "keep";
    case Step3Case::SwapA: return "swapA";
    case Step3Case::SwapB: return "swapB";
  }
  return "unknown";
}

std::string_view to_string(Ordering2Q o) noexcept {
  switch (o) {
    case Ordering2Q::OptimalA: return "OptimalA";
    case Ordering2Q::OptimalB: return "OptimalB";
    case Ordering2Q::NotOptimal: return "NotOptimal";
  }
  return "unknown";
}

const std::array<std::array<int, 4>, 4>& ordering_patterns_2q(Ordering2Q family) {
  static const std::array<std::array<int, 4>, 4> a{{{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}}};
  static const std::array<std::array<int, 4>, 4> b{{{1, 3, 2, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}, {4, 2, 3, 1}}};
  if (family == Ordering2Q::NotOptimal) throw Error(ErrorKind::InvalidArgument, "NotOptimal has no patterns");
  return family == Ordering2Q::OptimalA ? a : b;
}

namespace {

void require_two_qubits(const DensityMatrix& rho) {
  if (rho.qubits() != 2) throw Error(ErrorKind::DimensionMismatch, "expected a two-qubit state");
}

bool in_family(std::span<const double> diag, Ordering2Q family) {
  for (const auto& p : ordering_patterns_2q(family))
    if (matches_pattern(diag, p)) return true;
  return false;
}

}  // namespace

Ordering2Q detect_optimal_ordering(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const std::vector<double> diag = rho.diagonal();
  if (in_family(diag, Ordering2Q::OptimalA)) return Ordering2Q::OptimalA;
  if (in_family(diag, Ordering2Q::OptimalB)) return Ordering2Q::OptimalB;
  return Ordering2Q::NotOptimal;
}

Reordering reorder_diagonal(const DensityMatrix& rho, Ordering2Q target) {
  require_two_qubits(rho);
  if (target == Ordering2Q::NotOptimal) throw Error(ErrorKind::InvalidArgument, "reorder target must be OptimalA or OptimalB");
  return reorder_to_pattern(rho, ordering_patterns_2q(target)[0]);
}

double IdentityReport::max_claimed_error() const noexcept {
  double m = 0.0;
  for (const auto& c : checks)
    if (c.claimed) m = std::max(m, c.error);
  return m;
}

IdentityReport gate_action_identities(const DensityMatrix& rho, const PermutationGate& g, const ModelSpec& spec) {
  require_two_qubits(rho);
  IdentityReport rep{g, {}};
  const DensityMatrix out = apply_gate(rho, g);
  const CoherenceSplit2Q before = coherence_split_2q(rho);
  const CoherenceSplit2Q after = coherence_split_2q(out);
  auto r = [&](int i, int j) { return rho(i - 1, j - 1); };

  const std::string n = g.name();
  if (n == "U14" || n == "U23") {
    const CapacityBreakdown b0 = subsystem_capacities(rho, spec);
    const CapacityBreakdown b1 = subsystem_capacities(out, spec);
    rep.checks.push_back({"sub_A(out) = sub_B(in)", std::abs(b1.sub_A - b0.sub_B)});
    rep.checks.push_back({"sub_B(out) = sub_A(in)", std::abs(b1.sub_B - b0.sub_A)});
  } else if (n == "U12" || n == "U34") {
    rep.checks.push_back({"IC_A preserved", std::abs(after.ic_A - before.ic_A)});
    rep.checks.push_back({"C_A(out) = C*(in)", std::abs(after.c_A - before.c_star)});
    rep.checks.push_back({"C*(out) = C_A(in)", std::abs(after.c_star - before.c_A)});
  } else if (n == "U13" || n == "U24") {
    // The B-side swap picks up a conjugate on rho_23, so the literal
    // C_B <-> C* exchange only holds when rho_14 and rho_23 have aligned phases.
    const double c_star_conj = 2.0 * std::abs(r(1, 4) + std::conj(r(2, 3)));
    rep.checks.push_back({"IC_B preserved", std::abs(after.ic_B - before.ic_B)});
    rep.checks.push_back({"C_B(out) = C*(in)", std::abs(after.c_B - before.c_star)});
    rep.checks.push_back({"C*(out) = C_B(in)", std::abs(after.c_star - before.c_B)});
    rep.checks.push_back({"C_B(out) = 2|rho14 + conj(rho23)|", std::abs(after.c_B - c_star_conj), false});
    const double c_b_conj = 2.0 * std::abs(r(1, 2) + std::conj(r(3, 4)));
    rep.checks.push_back({"C*(out) = 2|rho12 + conj(rho34)|", std::abs(after.c_star - c_b_conj), false});
  } else {
    throw Error(ErrorKind::UnsupportedGate, n + " has no stated two-qubit identity");
  }
  return rep;
}

ProtocolReport run_protocol(const DensityMatrix& rho, const ModelSpec& spec) {
  require_two_qubits(rho);
  if (spec.qubits != 2) throw Error(ErrorKind::BadSpec, "run_protocol needs a two-qubit model");
  const Hamiltonian h = build_hamiltonian(spec);
  ProtocolReport rep;
  rep.qubits = 2;
  if (!h0_dominance_check(rho, h, build_h0(field_only(spec))))
    rep.warnings.push_back("C(rho;H) < C(rho;H0): the trade-off bound is not guaranteed for this model");

  const CapacityBreakdown b = subsystem_capacities(rho, spec, h);
  rep.total = b.total;
  rep.initial_residual = b.residual;
  rep.c1 = rep.c2 = rep.c3 = b.sub_sum;
  rep.reordered_state = rep.step3_state = rep.final_state = rho.matrix();

  // Step 1.
  if (b.residual <= kGainTol) {
    rep.verdict = Verdict::AlreadyTight;
    rep.final_residual = b.residual;
    return rep;
  }

  // Step 2.
  DensityMatrix current = rho;
  const Ordering2Q found = detect_optimal_ordering(rho);
  if (found != Ordering2Q::NotOptimal) {
    rep.target = to_string(found);
  } else {
    Reordering ra = reorder_diagonal(rho, Ordering2Q::OptimalA);
    Reordering rb = reorder_diagonal(rho, Ordering2Q::OptimalB);
    const bool pick_b = sub_ic(rb.state, spec) > sub_ic(ra.state, spec);
    Reordering& chosen = pick_b ? rb : ra;
    rep.target = to_string(pick_b ? Ordering2Q::OptimalB : Ordering2Q::OptimalA);
    rep.reordered = true;
    rep.reorder_gates = chosen.gates;
    current = chosen.state;
    rep.c2 = sub_capacity(current, spec);
  }
  rep.reordered_state = current.matrix();

  // Step 3.
  const CoherenceSplit2Q s = coherence_split_2q(current);
  const double lowest = std::min({s.c_A, s.c_B, s.c_star});
  DensityMatrix step3 = current;
  rep.c3 = rep.c2;
  if (s.c_star <= lowest + kOrderingTol) {
    rep.step3_case = Step3Case::KeepCStar;
  } else {
    const bool swap_a = s.c_A <= lowest + kOrderingTol;
    rep.step3_case = swap_a ? Step3Case::SwapA : Step3Case::SwapB;
    rep.step3_gate = swap_a ? PermutationGate{1, 2} : PermutationGate{1, 3};
    step3 = apply_gate(current, *rep.step3_gate);
    rep.c3 = sub_capacity(step3, spec);
    rep.candidates.push_back({*rep.step3_gate, rep.c3});
  }
  rep.step3_state = step3.matrix();

  // Step 4: longer paths only win when strictly better.
  double best = rep.c1;
  if (rep.c2 > best + kGainTol) {
    best = rep.c2;
    rep.gates_applied = rep.reorder_gates;
    rep.final_state = rep.reordered_state;
  }
  if (rep.step3_gate && rep.c3 > best + kGainTol) {
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

GainCondition gain_condition(const DensityMatrix& rho, const ComplexMatrix& u, const ModelSpec& spec) {
  if (u.dim() != rho.dim()) throw Error(ErrorKind::DimensionMismatch, "unitary and state dimensions differ");
  const DensityMatrix out = conjugate(rho, u);
  const DensityMatrix tau = dephase(out);
  GainCondition gc;
  for (int q = 0; q < rho.qubits(); ++q) {
    gc.lambda_sum += reduce(rho, q).spectrum().max();
    const DensityMatrix t = reduce(tau, q);
    gc.xi_sum += std::max(t(0, 0).real(), t(1, 1).real());
  }
  gc.sub_before = sub_capacity(rho, spec);
  gc.sub_after = sub_capacity(out, spec);
  gc.condition = gc.xi_sum > gc.lambda_sum + kGainTol;
  gc.gain = gc.sub_after > gc.sub_before;
  return gc;
}

GainCondition theorem2_condition(const DensityMatrix& rho, const ComplexMatrix& u, const ModelSpec& spec) {
  require_two_qubits(rho);
  return gain_condition(rho, u, spec);
}

double exhaustive_best_sub(const DensityMatrix& rho, const ModelSpec& spec, int depth) {
  if (depth < 0 || depth > 2) throw Error(ErrorKind::InvalidArgument, "depth must be 0, 1 or 2");
  double best = sub_capacity(rho, spec);
  if (depth == 0) return best;
  const auto gates = all_transpositions(rho.dim());
  for (const auto& g1 : gates) {
    const DensityMatrix s1 = apply_gate(rho, g1);
    best = std::max(best, sub_capacity(s1, spec));
    if (depth < 2) continue;
    for (const auto& g2 : gates) best = std::max(best, sub_capacity(apply_gate(s1, g2), spec));
  }
  return best;
}

}  // namespace qbcap
