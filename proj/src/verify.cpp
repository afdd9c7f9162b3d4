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

#include "qbcap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>

#include "qbcap/capacity.hpp"
#include "qbcap/mintime.hpp"
#include "qbcap/protocol2.hpp"
#include "qbcap/protocol3.hpp"
#include "qbcap/qmp.hpp"
#include "qbcap/sampling.hpp"

#ifdef QBCAP_HAVE_OPENMP
#include <omp.h>
#endif

namespace qbcap {

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::Tradeoff2: return "tradeoff2";
    case Suite::Tradeoff3: return "tradeoff3";
    case Suite::Qmp: return "qmp";
    case Suite::Theorem2: return "theorem2";
    case Suite::Theorem4: return "theorem4";
    case Suite::GateIdentities: return "gate-identities";
    case Suite::Table1: return "table1";
    case Suite::Cartan: return "cartan";
  }
  return "unknown";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> s{Suite::Tradeoff2, Suite::Tradeoff3,      Suite::Qmp,    Suite::Theorem2,
                                    Suite::Theorem4,  Suite::GateIdentities, Suite::Table1, Suite::Cartan};
  return s;
}

Suite parse_suite(std::string_view name) {
  for (Suite s : all_suites())
    if (to_string(s) == name) return s;
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

bool parallel_available() noexcept {
#ifdef QBCAP_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

// Outcome of one check on one sample.
struct Mark {
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  double max_violation = 0.0;

  // `excess` is how far the quantity overshoots its bound; > tol is a violation.
  void record(double excess, double tol) {
    ++evaluated;
    if (excess > tol) {
      ++violations;
      max_violation = std::max(max_violation, excess);
    }
  }
};

struct Plan {
  std::vector<std::string> checks;
  // Fills one Mark per check for sample `index`.
  std::function<void(std::size_t index, std::vector<Mark>& marks)> sample;
};

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// A random two-qubit model of the given kind and axis.
ModelSpec random_model(ModelKind kind, FieldAxis axis, Rng& rng) {
  const double e = uniform(rng, 0.1, 2.0);
  const double j = uniform(rng, 0.0, 3.0);
  double alpha = uniform(rng, -1.0, 1.0);
  if (alpha == 0.0) alpha = 0.5;
  switch (kind) {
    case ModelKind::Ising: return ModelSpec::ising(axis, e, j);
    case ModelKind::XX: return ModelSpec::xx(axis, e, j, alpha);
    case ModelKind::XXZ: return ModelSpec::xxz(axis, e, j, alpha);
    case ModelKind::XXX: return ModelSpec::xxx(axis, e, j);
    default: return ModelSpec::non_interacting(2, axis, e);
  }
}

const std::vector<FieldAxis>& axes() {
  static const std::vector<FieldAxis> a{FieldAxis::transverse(), FieldAxis::longitudinal()};
  return a;
}

Plan tradeoff2_plan(std::uint64_t seed) {
  static const ModelKind kinds[] = {ModelKind::Ising, ModelKind::XX, ModelKind::XXZ, ModelKind::XXX};
  Plan p;
  for (ModelKind k : kinds)
    for (const auto& ax : axes()) {
      const std::string tag = std::string(to_string(k)) + "/" + std::string(to_string(ax.kind));
      p.checks.push_back("sub_sum <= total " + tag);
      p.checks.push_back("C(H) >= C(H0) " + tag);
    }
  p.sample = [seed](std::size_t index, std::vector<Mark>& marks) {
    Rng rng = make_rng("tradeoff2", seed, index);
    const DensityMatrix rho = random_density_matrix(2, rng);
    std::size_t m = 0;
    for (ModelKind k : kinds)
      for (const auto& ax : axes()) {
        const ModelSpec spec = random_model(k, ax, rng);
        const Hamiltonian h = build_hamiltonian(spec);
        const CapacityBreakdown b = subsystem_capacities(rho, spec, h);
        marks[m++].record(b.sub_sum - b.total, kTradeoffTol);
        const double c0 = battery_capacity(rho, build_h0(field_only(spec)));
        marks[m++].record(c0 - b.total, kTradeoffTol);
      }
  };
  return p;
}

Plan tradeoff3_plan(std::uint64_t seed) {
  Plan p;
  for (const auto& ax : axes()) p.checks.push_back("sub_sum <= total H0/" + std::string(to_string(ax.kind)));
  p.sample = [seed](std::size_t index, std::vector<Mark>& marks) {
    Rng rng = make_rng("tradeoff3", seed, index);
    const DensityMatrix rho = random_density_matrix(3, rng);
    std::size_t m = 0;
    for (const auto& ax : axes()) {
      const ModelSpec spec = ModelSpec::non_interacting(3, ax, uniform(rng, 0.1, 2.0));
      const CapacityBreakdown b = subsystem_capacities(rho, spec);
      marks[m++].record(b.sub_sum - b.total, kTradeoffTol);
    }
  };
  return p;
}

// Every 11th sample is a three-qubit state, so n two-qubit-equivalent draws
// cover both marginal problems in the 10:1 ratio used by the acceptance gate.
Plan qmp_plan(std::uint64_t seed) {
  Plan p;
  const DensityMatrix probe2 = DensityMatrix::maximally_mixed(2);
  const DensityMatrix probe3 = DensityMatrix::maximally_mixed(3);
  for (const auto& r : check_state(probe2).inequalities) p.checks.push_back("2q " + r.id);
  const std::size_t n2 = p.checks.size();
  for (const auto& r : check_state(probe3).inequalities) p.checks.push_back("3q " + r.id);
  p.sample = [seed, n2](std::size_t index, std::vector<Mark>& marks) {
    Rng rng = make_rng("qmp", seed, index);
    const bool three = index % 11 == 10;
    const DensityMatrix rho = random_density_matrix(three ? 3 : 2, rng);
    const QmpReport rep = check_state(rho);
    const std::size_t base = three ? n2 : 0;
    for (std::size_t k = 0; k < rep.inequalities.size(); ++k)
      marks[base + k].record(-rep.inequalities[k].slack, kQmpSlack);
  };
  return p;
}

Plan theorem_plan(std::uint64_t seed, int qubits) {
  Plan p;
  p.checks = {"condition => gain", "condition held"};
  p.sample = [seed, qubits](std::size_t index, std::vector<Mark>& marks) {
    Rng rng = make_rng(qubits == 2 ? "theorem2" : "theorem4", seed, index);
    const DensityMatrix rho = random_density_matrix(qubits, rng);
    const ComplexMatrix u = random_unitary(rho.dim(), rng);
    const GainCondition gc = qubits == 2 ? theorem2_condition(rho, u) : theorem4_condition(rho, u);
    if (gc.condition) {
      ++marks[0].evaluated;
      if (!gc.gain) {
        ++marks[0].violations;
        marks[0].max_violation = std::max(marks[0].max_violation, gc.sub_before - gc.sub_after);
      }
    }
    // Informational: how often the sufficient condition fires. Never a violation.
    marks[1].evaluated += gc.condition ? 1 : 0;
  };
  return p;
}

Plan gate_identities_plan(std::uint64_t seed) {
  static const PermutationGate gates[] = {{1, 4}, {2, 3}, {1, 2}, {3, 4}, {1, 3}, {2, 4}};
  Plan p;
  const DensityMatrix probe = DensityMatrix::maximally_mixed(2);
  for (const auto& g : gates) {
    const IdentityReport rep = gate_action_identities(probe, g);
    for (const auto& c : rep.checks)
      p.checks.push_back(g.name() + " " + c.id + (c.claimed ? "" : " [auxiliary]"));
  }
  p.sample = [seed](std::size_t index, std::vector<Mark>& marks) {
    Rng rng = make_rng("gate-identities", seed, index);
    const DensityMatrix rho = random_density_matrix(2, rng);
    std::size_t m = 0;
    for (const auto& g : gates) {
      const IdentityReport rep = gate_action_identities(rho, g);
      for (const auto& c : rep.checks) marks[m++].record(c.error, kIdentityTol);
    }
  };
  return p;
}

Plan table1_plan(std::uint64_t seed) {
  Plan p;
  static const char* names[] = {"C_A", "C_B", "C_C"};
  for (const auto& g : table1_gates()) {
    for (const char* n : names) p.checks.push_back(g.name() + " " + n);
    p.checks.push_back(g.name() + " IC preserved");
  }
  p.sample = [seed](std::size_t index, std::vector<Mark>& marks) {
    Rng rng = make_rng("table1", seed, index);
    const DensityMatrix rho = random_density_matrix(3, rng);
    const CoherenceSplit3Q before = coherence_split_3q(rho);
    std::size_t m = 0;
    for (const auto& g : table1_gates()) {
      const CoherenceSplit3Q after = table1_action(rho, g);
      const auto tabulated = table1_formula(rho, g);
      marks[m++].record(std::abs(after.c_A - tabulated[0]), kIdentityTol);
      marks[m++].record(std::abs(after.c_B - tabulated[1]), kIdentityTol);
      marks[m++].record(std::abs(after.c_C - tabulated[2]), kIdentityTol);
      // Gates U_ij with i-1, j-1 differing only in bit b preserve the two IC
      // values of the other qubits.
      const int flip = (g.i - 1) ^ (g.j - 1);
      double err = 0.0;
      if (flip != 4) err = std::max(err, std::abs(after.ic_A - before.ic_A));
      if (flip != 2) err = std::max(err, std::abs(after.ic_B - before.ic_B));
      if (flip != 1) err = std::max(err, std::abs(after.ic_C - before.ic_C));
      marks[m++].record(err, kIdentityTol);
    }
  };
  return p;
}

Plan cartan_plan(std::uint64_t seed) {
  static const PermutationGate gates[] = {{1, 4}, {2, 3}, {1, 2}, {3, 4}, {1, 3}, {2, 4}};
  Plan p;
  p.checks = {"closure relations", "invariants match stored coordinates", "local equivalence"};
  p.sample = [seed](std::size_t index, std::vector<Mark>& marks) {
    if (index == 0) {
      for (const auto& c : cartan_algebra_checks()) marks[0].record(c.residual, kIdentityTol);
      for (const auto& g : gates) {
        const LocalInvariants a = local_invariants(materialize(g, 4));
        const LocalInvariants b = invariants_from_coordinates(protocol_gate_coordinates(g));
        marks[1].record(std::max({std::abs(a.chi1.real() - b.chi1.real()), std::abs(a.chi1.imag() - b.chi1.imag()),
                                  std::abs(a.chi2 - b.chi2)}),
                        kInvariantTol);
      }
    }
    Rng rng = make_rng("cartan", seed, index);
    const ComplexMatrix v1 = random_local_unitary(rng);
    const ComplexMatrix v2 = random_local_unitary(rng);
    for (const auto& g : gates) {
      const ComplexMatrix u = materialize(g, 4);
      const LocalInvariants a = local_invariants(u);
      const LocalInvariants b = local_invariants(v1 * u * v2);
      marks[2].record(std::max({std::abs(a.chi1.real() - b.chi1.real()), std::abs(a.chi1.imag() - b.chi1.imag()),
                                std::abs(a.chi2 - b.chi2)}),
                      kLocalEquivTol);
    }
  };
  return p;
}

Plan make_plan(Suite suite, std::uint64_t seed) {
  switch (suite) {
    case Suite::Tradeoff2: return tradeoff2_plan(seed);
    case Suite::Tradeoff3: return tradeoff3_plan(seed);
    case Suite::Qmp: return qmp_plan(seed);
    case Suite::Theorem2: return theorem_plan(seed, 2);
    case Suite::Theorem4: return theorem_plan(seed, 3);
    case Suite::GateIdentities: return gate_identities_plan(seed);
    case Suite::Table1: return table1_plan(seed);
    case Suite::Cartan: return cartan_plan(seed);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown suite");
}

}  // namespace

SuiteResult run_suite(Suite suite, std::size_t n, std::uint64_t seed, Execution exec) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "suite needs n >= 1");
  const auto start = std::chrono::steady_clock::now();
  const Plan plan = make_plan(suite, seed);
  const std::size_t k = plan.checks.size();
  std::vector<std::vector<Mark>> marks(n, std::vector<Mark>(k));

  if (exec == Execution::Parallel && parallel_available()) {
#ifdef QBCAP_HAVE_OPENMP
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) plan.sample(static_cast<std::size_t>(i), marks[static_cast<std::size_t>(i)]);
#endif
  } else {
    for (std::size_t i = 0; i < n; ++i) plan.sample(i, marks[i]);
  }

  // Reduce in index order so both kernels give the same report.
  SuiteResult res;
  res.suite = suite;
  res.n = n;
  res.seed = seed;
  res.tallies.resize(k);
  for (std::size_t c = 0; c < k; ++c) res.tallies[c].id = plan.checks[c];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < k; ++c) {
      const Mark& mk = marks[i][c];
      CheckTally& t = res.tallies[c];
      t.evaluated += mk.evaluated;
      if (mk.violations == 0) continue;
      t.violations += mk.violations;
      t.max_violation = std::max(t.max_violation, mk.max_violation);
      if (!t.first_offender) t.first_offender = i;
      res.violations += mk.violations;
      res.max_violation_magnitude = std::max(res.max_violation_magnitude, mk.max_violation);
      if (!res.first_offender || i < *res.first_offender) res.first_offender = i;
    }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace qbcap
