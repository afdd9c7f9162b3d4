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


#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "qbcap/capacity.hpp"
#include "qbcap/protocol2.hpp"
#include "qbcap/reproduce.hpp"
#include "qbcap/sampling.hpp"
#include "support.hpp"

using namespace qbcap;
using qbcap::testing::diag_state;
using qbcap::testing::random_state;

namespace {

const FieldAxis kL = FieldAxis::longitudinal();
const FieldAxis kT = FieldAxis::transverse();

double sub(const DensityMatrix& r, const ModelSpec& spec) { return sub_capacity(r, spec); }

// Real symmetric random state: Re of a Ginibre state stays PSD.
DensityMatrix real_state(std::uint64_t i) {
  const DensityMatrix r = random_state(2, i, "real");
  ComplexMatrix m(4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) m(a, b) = r(a, b).real();
  return DensityMatrix(m);
}

}  // namespace

TEST_CASE("gates are exact involutive permutations") {
  const DensityMatrix r = random_state(3, 2);
  for (const PermutationGate& g : all_transpositions(8)) {
    const DensityMatrix once = apply_gate(r, g);
    CHECK(apply_gate(once, g).matrix() == r.matrix());
    const ComplexMatrix u = materialize(g, 8);
    CHECK(max_abs_diff(once.matrix(), u * r.matrix() * u.adjoint()) < 1e-15);
  }
  CHECK(all_transpositions(4).size() == 6);
  CHECK(all_transpositions(8).size() == 28);
  CHECK(PermutationGate::make(4, 1) == PermutationGate{1, 4});
  CHECK(PermutationGate::make(3, 4).name() == "U34");
  CHECK_THROWS_AS(PermutationGate::make(2, 2), Error);
  CHECK_THROWS_AS(PermutationGate::make(0, 2), Error);
  CHECK_THROWS_AS(apply_gate(random_state(2, 0), PermutationGate{1, 5}), Error);
}

TEST_CASE("U34 on the Ising-family state swaps rows and columns 3 and 4") {
  const double a = 0.8;
  const DensityMatrix t = apply_gate(ising_family_state(a), PermutationGate{3, 4});
  const ComplexMatrix expected =
      ComplexMatrix{{2, a, 0, 0}, {a, 1, 0, 0}, {0, 0, 2, a}, {0, 0, a, 1}} * cplx(1.0 / 6.0);
  CHECK(max_abs_diff(t.matrix(), expected) < 1e-16);
}

TEST_CASE("U14 permutes the corner entries") {
  const DensityMatrix r = random_state(2, 3);
  const DensityMatrix t = apply_gate(r, PermutationGate{1, 4});
  const int perm[] = {4, 2, 3, 1};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(qbcap::testing::at(t, i, j) == qbcap::testing::at(r, perm[i - 1], perm[j - 1]));
}

TEST_CASE("optimal ordering detection") {
  CHECK(detect_optimal_ordering(diag_state({0.4, 0.3, 0.2, 0.1})) == Ordering2Q::OptimalA);
  CHECK(detect_optimal_ordering(diag_state({0.4, 0.2, 0.3, 0.1})) == Ordering2Q::OptimalB);
  CHECK(detect_optimal_ordering(diag_state({0.25, 0.25, 0.25, 0.25})) == Ordering2Q::OptimalA);
  CHECK(detect_optimal_ordering(diag_state({0.1, 0.4, 0.3, 0.2})) == Ordering2Q::NotOptimal);
  CHECK(detect_optimal_ordering(diag_state({0.1, 0.2, 0.3, 0.4})) == Ordering2Q::OptimalA);
}

TEST_CASE("optimal orderings maximise the incoherent parts") {
  // Every pattern of a family gives the largest IC of its subsystem and the
  // second largest for the other.
  const std::vector<double> mu{0.41, 0.29, 0.18, 0.12};
  std::vector<int> idx{0, 1, 2, 3};
  double best = -1, second = -1;
  do {
    std::vector<double> p(4);
    for (int k = 0; k < 4; ++k) p[static_cast<std::size_t>(k)] = mu[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
    const double ic = p[0] + p[1] - p[2] - p[3];
    if (ic > best + 1e-12) {
      second = best;
      best = ic;
    } else if (ic < best - 1e-12 && ic > second + 1e-12) {
      second = ic;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  for (const Ordering2Q fam : {Ordering2Q::OptimalA, Ordering2Q::OptimalB})
    for (const auto& pattern : ordering_patterns_2q(fam)) {
      std::vector<double> p(4);
      for (int k = 0; k < 4; ++k) p[static_cast<std::size_t>(pattern[static_cast<std::size_t>(k)] - 1)] = mu[static_cast<std::size_t>(k)];
      const CoherenceSplit2Q s = coherence_split_2q(diag_state(p));
      const double mine = fam == Ordering2Q::OptimalA ? s.ic_A : s.ic_B;
      const double other = fam == Ordering2Q::OptimalA ? s.ic_B : s.ic_A;
      CHECK(std::abs(std::abs(mine) - best) < 1e-12);
      CHECK(std::abs(std::abs(other) - second) < 1e-12);
      CHECK(detect_optimal_ordering(diag_state(p)) == fam);
    }
}

TEST_CASE("diagonal reordering") {
  SUBCASE("already sorted") {
    const Reordering r = reorder_diagonal(diag_state({0.4, 0.3, 0.2, 0.1}), Ordering2Q::OptimalA);
    CHECK(r.gates.empty());
  }
  SUBCASE("full reversal") {
    const Reordering r = reorder_diagonal(diag_state({0.1, 0.2, 0.3, 0.4}), Ordering2Q::OptimalA);
    const std::vector<double> d = r.state.diagonal();
    CHECK(d == std::vector<double>{0.4, 0.3, 0.2, 0.1});
    CHECK(r.gates.size() <= 3);
    CHECK(apply_gates(diag_state({0.1, 0.2, 0.3, 0.4}), r.gates).matrix() == r.state.matrix());
  }
  SUBCASE("Ising-family state") {
    const Reordering r = reorder_diagonal(ising_family_state(1.0), Ordering2Q::OptimalA);
    const std::vector<double> d = r.state.diagonal();
    const std::vector<double> expected{2.0 / 6, 2.0 / 6, 1.0 / 6, 1.0 / 6};
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(d[k] - expected[k]) < 1e-15);
    REQUIRE(r.gates.size() == 1);
  }
  CHECK_THROWS_AS(reorder_diagonal(diag_state({0.4, 0.3, 0.2, 0.1}), Ordering2Q::NotOptimal), Error);
}

TEST_CASE("reordering never lowers the incoherent subsystem capacity") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const DensityMatrix r = random_state(2, i);
    const ModelSpec spec = ModelSpec::non_interacting(2, i % 2 ? kL : kT);
    for (const Ordering2Q fam : {Ordering2Q::OptimalA, Ordering2Q::OptimalB}) {
      const Reordering re = reorder_diagonal(r, fam);
      CHECK(sub_ic(re.state, spec) >= sub_ic(r, spec) - 1e-10);
      CHECK(detect_optimal_ordering(re.state) != Ordering2Q::NotOptimal);
    }
  }
}

TEST_CASE("gate action identities") {
  SUBCASE("exact on random complex states for U14, U23, U12, U34") {
    for (std::uint64_t i = 0; i < 100; ++i) {
      const DensityMatrix r = random_state(2, i);
      for (const auto g : {PermutationGate{1, 4}, PermutationGate{2, 3}, PermutationGate{1, 2}, PermutationGate{3, 4}}) {
        const IdentityReport rep = gate_action_identities(r, g);
        CHECK(rep.max_claimed_error() < 1e-12);
      }
    }
  }
  SUBCASE("U14 swaps the subsystem capacities under any field") {
    const ModelSpec spec = ModelSpec::non_interacting(2, FieldAxis::general(0.2, 0.5, -1.0));
    for (std::uint64_t i = 0; i < 50; ++i) {
      const DensityMatrix r = random_state(2, i);
      const DensityMatrix t = apply_gate(r, PermutationGate{1, 4});
      const CapacityBreakdown before = subsystem_capacities(r, spec);
      const CapacityBreakdown after = subsystem_capacities(t, spec);
      CHECK(std::abs(after.sub_A - before.sub_B) < 1e-10);
      CHECK(std::abs(after.sub_B - before.sub_A) < 1e-10);
    }
  }
  SUBCASE("U12: IC_A kept, C_A becomes C*") {
    for (std::uint64_t i = 0; i < 50; ++i) {
      const DensityMatrix r = random_state(2, i);
      const CoherenceSplit2Q b = coherence_split_2q(r);
      const CoherenceSplit2Q a = coherence_split_2q(apply_gate(r, PermutationGate{1, 2}));
      CHECK(std::abs(a.ic_A - b.ic_A) < 1e-12);
      CHECK(std::abs(a.c_A - b.c_star) < 1e-12);
    }
  }
  SUBCASE("U34 on the Bell-family state") {
    const DensityMatrix t = apply_gate(bell_family_state(1.0), PermutationGate{3, 4});
    const CoherenceSplit2Q s = coherence_split_2q(t);
    // C* moves into C_A; sub_B rises through IC_B.
    CHECK(s.c_A == doctest::Approx(1.0));
    CHECK(s.c_B == 0.0);
    CHECK(s.ic_B == doctest::Approx(1.0));
    const CapacityBreakdown c = subsystem_capacities(t, ModelSpec::non_interacting(2, kL));
    CHECK(c.sub_A == doctest::Approx(2.0));
    CHECK(c.sub_B == doctest::Approx(2.0));
  }
  SUBCASE("U13 / U24 hold on real states") {
    for (std::uint64_t i = 0; i < 50; ++i)
      for (const auto g : {PermutationGate{1, 3}, PermutationGate{2, 4}})
        CHECK(gate_action_identities(real_state(i), g).max_claimed_error() < 1e-12);
  }
  SUBCASE("U13 / U24 on complex states: the C* partner carries a conjugate") {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i)
      for (const auto g : {PermutationGate{1, 3}, PermutationGate{2, 4}}) {
        const IdentityReport rep = gate_action_identities(random_state(2, i), g);
        worst = std::max(worst, rep.max_claimed_error());
        for (const IdentityCheck& c : rep.checks)
          if (!c.claimed) CHECK(c.pass(1e-12));
      }
    CHECK(worst > 1e-3);
  }
  CHECK_THROWS_AS(gate_action_identities(random_state(2, 0), PermutationGate{1, 1}), Error);
}

TEST_CASE("protocol on the Bell-family state") {
  for (double b : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const ProtocolReport r = run_protocol(bell_family_state(b), bell_family_model());
    CHECK(r.verdict == Verdict::Gain);
    CHECK(std::abs(r.total - 4.0) < 1e-9);
    CHECK(std::abs(r.initial_residual - 4.0) < 1e-9);
    const double best = std::max({r.c1, r.c2, r.c3});
    CHECK(std::abs(best - (2 + 2 * b)) < 1e-9);
    CHECK(std::abs(r.final_residual - (4.0 - best)) < 1e-9);
    REQUIRE_FALSE(r.gates_applied.empty());
  }
}

TEST_CASE("protocol on the Ising-family state") {
  for (const FieldAxis axis : {kL, kT})
    for (double J : {0.4, 0.8, 1.2})
      for (double a : {0.3, 1.0, 1.4}) {
        const ModelSpec spec = ising_family_model(axis, J);
        const ProtocolReport r = run_protocol(ising_family_state(a), spec);
        const IsingFamilyClosedForm cf = ising_family_closed_form(axis.kind, a, J);
        CHECK(r.verdict == Verdict::Gain);
        CHECK(std::abs(r.total - cf.total) < 1e-9);
        CHECK(std::abs(r.initial_residual - cf.residual_before) < 1e-9);
        CHECK(std::abs(r.final_residual - cf.residual_after) < 1e-9);
        if (axis.kind == AxisKind::Longitudinal && J <= 1.0) CHECK(std::abs(r.final_residual) < 1e-9);
      }
}

TEST_CASE("already tight states") {
  const ProtocolReport r =
      run_protocol(DensityMatrix::computational_basis(2, 0), ModelSpec::non_interacting(2, kL));
  CHECK(r.verdict == Verdict::AlreadyTight);
  CHECK(r.gates_applied.empty());
  CHECK(std::abs(r.final_residual) < 1e-10);
}

TEST_CASE("protocol properties on random states") {
  const std::vector<ModelSpec> specs{ModelSpec::non_interacting(2, kL), ModelSpec::ising(kT, 1.0, 0.7),
                                     ModelSpec::xxz(kL, 0.6, 1.8, -0.4)};
  for (std::uint64_t i = 0; i < 200; ++i) {
    const DensityMatrix rho = random_state(2, i);
    const ModelSpec& spec = specs[i % specs.size()];
    const ProtocolReport r = run_protocol(rho, spec);
    const double best = std::max({r.c1, r.c2, r.c3});

    const DensityMatrix replay = apply_gates(rho, r.gates_applied);
    CHECK(max_abs_diff(replay.matrix(), r.final_state) < 1e-15);
    CHECK(std::abs(sub(replay, spec) - best) < 1e-10);
    CHECK(std::abs(battery_capacity(replay, build_hamiltonian(spec)) - r.total) < 1e-9);
    CHECK(std::abs(r.final_residual - (r.total - best)) < 1e-9);
    CHECK(best <= exhaustive_best_sub(rho, spec) + 1e-9);
    CHECK(std::abs(r.c1 - sub(rho, spec)) < 1e-12);
    if (r.verdict == Verdict::Gain) CHECK(best > r.c1 + kGainTol);
    if (r.verdict == Verdict::NoGain) CHECK(best <= r.c1 + kGainTol);
    if (r.reordered)
      CHECK(sub_ic(DensityMatrix::unchecked(r.reordered_state), spec) >= sub_ic(rho, spec) - 1e-10);
  }
}

TEST_CASE("gain condition") {
  SUBCASE("U34 on the Bell-family state") {
    const GainCondition g = theorem2_condition(bell_family_state(1.0), materialize(PermutationGate{3, 4}, 4));
    CHECK(g.condition);
    CHECK(g.gain);
    CHECK(g.xi_sum > g.lambda_sum);
  }
  SUBCASE("identity") {
    const GainCondition g = theorem2_condition(random_state(2, 1), ComplexMatrix::identity(4));
    CHECK_FALSE(g.gain);
    CHECK(g.xi_sum <= g.lambda_sum + 1e-12);
    CHECK_FALSE(g.condition);
  }
  SUBCASE("condition implies gain on random pairs") {
    int fired = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      Rng rng = make_rng("thm2-unit", 9, i);
      const DensityMatrix rho = random_density_matrix(2, rng);
      const ComplexMatrix u = random_unitary(4, rng);
      const GainCondition g = theorem2_condition(rho, u);
      if (g.condition) {
        ++fired;
        CHECK(g.gain);
      }
    }
    CHECK(fired > 0);
  }
  CHECK_THROWS_AS(theorem2_condition(random_state(2, 1), ComplexMatrix::identity(4) * cplx(2.0)), Error);
  CHECK_THROWS_AS(theorem2_condition(random_state(2, 1), ComplexMatrix::identity(8)), Error);
}

TEST_CASE("exhaustive oracle") {
  const ModelSpec spec = ModelSpec::non_interacting(2, kL);
  const DensityMatrix rho = random_state(2, 11);
  const double d0 = exhaustive_best_sub(rho, spec, 0);
  const double d1 = exhaustive_best_sub(rho, spec, 1);
  const double d2 = exhaustive_best_sub(rho, spec, 2);
  CHECK(std::abs(d0 - sub(rho, spec)) < 1e-15);
  CHECK(d1 >= d0);
  CHECK(d2 >= d1);
  // Products of three transpositions add nothing.
  double d3 = d2;
  const auto gates = all_transpositions(4);
  for (const auto& a : gates)
    for (const auto& b : gates)
      for (const auto& c : gates) {
        const PermutationGate seq[] = {a, b, c};
        d3 = std::max(d3, sub(apply_gates(rho, seq), spec));
      }
  CHECK(std::abs(d3 - d2) < 1e-12);
  CHECK_THROWS_AS(exhaustive_best_sub(rho, spec, 3), Error);
}
