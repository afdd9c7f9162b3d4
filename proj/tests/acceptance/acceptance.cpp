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


// Acceptance gate: one PASS/FAIL line per criterion AC1..AC10. Exit status is
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qbcap/capacity.hpp"
#include "qbcap/gates.hpp"
#include "qbcap/hamiltonians.hpp"
#include "qbcap/mintime.hpp"
#include "qbcap/protocol2.hpp"
#include "qbcap/qmp.hpp"
#include "qbcap/reproduce.hpp"
#include "qbcap/sampling.hpp"
#include "qbcap/verify.hpp"

using namespace qbcap;
using std::numbers::pi;

namespace {

// Pinned tolerances and budgets.
constexpr double kAc1Tol = 1e-9;
constexpr double kAc1Seconds = 1.0;
constexpr double kAc2Tol = 1e-9;
constexpr double kAc2CurveTol = 1e-12;
constexpr double kAc2Seconds = 5.0;
constexpr double kAc3FlatTol = 1e-10;
constexpr double kAc3LawTol = 1e-9;
constexpr double kAc4Seconds = 60.0;
constexpr double kAc9InvTol = 1e-10;
constexpr double kAc9TimeTol = 1e-12;
constexpr double kAc9LocalTol = 1e-9;
constexpr double kAc9ClosureTol = 1e-12;
constexpr double kAc10Tol = 1e-9;

static_assert(kTradeoffTol == 1e-9);
static_assert(kIdentityTol == 1e-12);
static_assert(kLocalEquivTol == kAc9LocalTol);
static_assert(kInvariantTol == kAc9InvTol);

constexpr std::uint64_t kSeed = kDefaultSeed;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> notes;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(const char* id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  body(o);
  const double s = seconds_since(t0);
  std::printf("%s %s  %s: %s [%.3f s]\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.str().c_str(), s);
  for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
  if (!o.pass) ++failures;
  std::fflush(stdout);
}

void require(Outcome& o, bool ok, const std::string& note) {
  if (!ok) {
    o.pass = false;
    o.notes.push_back(note);
  }
}

void suite_outcome(Outcome& o, const SuiteResult& r) {
  o.detail << to_string(r.suite) << " n=" << r.n << " violations=" << r.violations << "; ";
  if (r.violations == 0) return;
  o.pass = false;
  for (const CheckTally& t : r.tallies)
    if (t.violations > 0) {
      std::ostringstream n;
      n << to_string(r.suite) << " '" << t.id << "': " << t.violations << "/" << t.evaluated
        << " violations, max " << t.max_violation << ", first at index " << t.first_offender.value_or(0);
      o.notes.push_back(n.str());
    }
}

DensityMatrix u34(const DensityMatrix& r) { return apply_gate(r, PermutationGate{3, 4}); }

void ac1(Outcome& o) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (double b : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const ProtocolReport r = run_protocol(bell_family_state(b), bell_family_model());
    const double best = std::max({r.c1, r.c2, r.c3});
    const double errs[] = {std::abs(best - (2 + 2 * b)), std::abs(r.total - 4.0), std::abs(r.initial_residual - 4.0)};
    for (double e : errs) worst = std::max(worst, e);
    require(o, errs[0] <= kAc1Tol, "b=" + std::to_string(b) + ": Sub " + std::to_string(best));
    require(o, errs[1] <= kAc1Tol && errs[2] <= kAc1Tol, "b=" + std::to_string(b) + ": total/residual off");
  }
  const double s = seconds_since(t0);
  require(o, s < kAc1Seconds, "runtime budget exceeded");
  o.detail << "max error " << worst << " (tol " << kAc1Tol << ")";
}

void ac2(Outcome& o) {
  const auto t0 = Clock::now();
  const auto L = FieldAxis::longitudinal();
  const auto T = FieldAxis::transverse();
  double worst = 0.0;
  auto track = [&](double err, double tol, const std::string& what) {
    worst = std::max(worst, err);
    require(o, err <= tol, what + " error " + std::to_string(err));
  };
  std::vector<double> curve04, curve08, curve12;
  for (double a : ising_grid()) {
    const DensityMatrix rho = ising_family_state(a);
    const double s = std::sqrt(4 * a * a + 1);
    for (double J : ising_couplings()) {
      const ModelSpec lspec = ising_family_model(L, J);
      const double before = residual_capacity(rho, lspec);
      const double after = residual_capacity(u34(rho), lspec);
      if (J <= 1.0) {
        track(std::abs(after), kAc2Tol, "longitudinal after, J=" + std::to_string(J));
        track(std::abs(before - (2.0 / 3.0 * s - 4 * a / 3.0)), kAc2Tol, "longitudinal before, J=" + std::to_string(J));
      }
      (J == 0.4 ? curve04 : J == 0.8 ? curve08 : curve12).push_back(before);

      // Transverse closed forms with sqrt(8 + J^2).
      const ModelSpec tspec = ising_family_model(T, J);
      const double total = s / 3.0 * (std::sqrt(8 + J * J) + J);
      track(std::abs(battery_capacity(rho, build_model(tspec)) - total), kAc2Tol, "transverse total");
      track(std::abs(residual_capacity(rho, tspec) - (total - 4 * std::sqrt(2.0) * a / 3.0)), kAc2Tol,
            "transverse before");
      track(std::abs(residual_capacity(u34(rho), tspec) - (total - 2 * std::sqrt(2.0) * s / 3.0)), kAc2Tol,
            "transverse after");
    }
  }
  double curve_gap = 0.0;
  for (std::size_t k = 0; k < curve04.size(); ++k) curve_gap = std::max(curve_gap, std::abs(curve04[k] - curve08[k]));
  require(o, curve_gap <= kAc2CurveTol, "J=0.4 and J=0.8 curves differ by " + std::to_string(curve_gap));
  const auto grid = ising_grid();
  for (std::size_t k = 0; k + 1 < grid.size(); ++k)
    require(o, curve12[k] > curve08[k], "J=1.2 not above at a=" + std::to_string(grid[k]));
  const double s = seconds_since(t0);
  require(o, s < kAc2Seconds, "runtime budget exceeded");
  o.detail << grid.size() << " grid points; max closed-form error " << worst << ", J=0.4 vs 0.8 gap " << curve_gap;
}

void ac3(Outcome& o) {
  const double E = 1.0;
  const auto L = FieldAxis::longitudinal();
  double flat = 0.0, law = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = make_rng("ac3", kSeed, i);
    const DensityMatrix r = random_density_matrix(2, rng);
    const Spectrum l = r.spectrum();
    const double c0 = battery_capacity(r, build_model(ModelSpec::ising(L, E, 0.0)));
    for (int k = 0; k < 20; ++k) {
      const double J = E * k / 19.0;
      flat = std::max(flat, std::abs(battery_capacity(r, build_model(ModelSpec::ising(L, E, J))) - c0));
    }
    for (int k = 1; k <= 20; ++k) {
      const double J = E + E * k / 20.0;
      const double expected = (2 * E + 2 * J) * (l[3] - l[0]) + (2 * J - 2 * E) * (l[2] - l[1]);
      law = std::max(law, std::abs(battery_capacity(r, build_model(ModelSpec::ising(L, E, J))) - expected));
    }
  }
  require(o, flat <= kAc3FlatTol, "capacity varies on [0, E]");
  require(o, law <= kAc3LawTol, "capacity deviates from the J > E law");
  o.detail << "100 states; max drift on [0,E] " << flat << " (tol " << kAc3FlatTol << "), law error " << law
           << " (tol " << kAc3LawTol << ")";
}

void ac4(Outcome& o) {
  const SuiteResult r = run_suite(Suite::Tradeoff2, 10000, kSeed);
  suite_outcome(o, r);
  std::size_t dominance = 0, tradeoff = 0;
  for (const CheckTally& t : r.tallies) {
    if (t.id.rfind("C(H) >= C(H0)", 0) == 0) ++dominance;
    if (t.id.rfind("sub_sum <= total", 0) == 0) ++tradeoff;
  }
  require(o, tradeoff == 8 && dominance == 8, "expected 8 model/field combinations for both checks");
  require(o, r.seconds < kAc4Seconds, "runtime budget exceeded");
  o.detail << tradeoff << " trade-off and " << dominance << " dominance checks, tol " << kTradeoffTol << ", "
           << r.seconds << " s";
}

void ac5(Outcome& o) {
  const SuiteResult r = run_suite(Suite::Tradeoff3, 1000, kSeed);
  suite_outcome(o, r);
  o.detail << "both field axes, tol " << kTradeoffTol;
}

void ac6(Outcome& o) {
  const SuiteResult r = run_suite(Suite::Qmp, 11000, kSeed);
  suite_outcome(o, r);
  o.detail << "10000 two-qubit + 1000 three-qubit states, slack " << kQmpSlack;
}

void ac7(Outcome& o) {
  suite_outcome(o, run_suite(Suite::GateIdentities, 100, kSeed));
  suite_outcome(o, run_suite(Suite::Table1, 100, kSeed));
  o.detail << "tol " << kIdentityTol;
  if (!o.pass)
    o.notes.push_back(
        "known: U13/U24 map C_B to 2|rho14 + conj(rho23)|, not C* = 2|rho14 + rho23|; exact only for real states");
}

void ac8(Outcome& o) {
  for (Suite s : {Suite::Theorem2, Suite::Theorem4}) {
    const SuiteResult r = run_suite(s, 1000, kSeed);
    suite_outcome(o, r);
    for (const CheckTally& t : r.tallies)
      if (t.id == "condition held") o.detail << "condition held " << t.evaluated << "x; ";
  }
}

void ac9(Outcome& o) {
  double inv = 0.0, time = 0.0, closure = 0.0;
  for (const PermutationGate g : {PermutationGate{1, 4}, PermutationGate{2, 3}}) {
    const LocalInvariants x = local_invariants(materialize(g, 4));
    inv = std::max({inv, std::abs(x.chi1 - cplx(-1.0)), std::abs(x.chi2 + 3.0)});
    time = std::max(time, std::abs(protocol_gate_time(g, 1.0).t_star - 3 * pi / 2));
    time = std::max(time, std::abs(protocol_gate_time(g, 2.5).t_star - 3 * pi / 5));
  }
  for (const PermutationGate g : {PermutationGate{1, 2}, PermutationGate{3, 4}, PermutationGate{1, 3},
                                  PermutationGate{2, 4}}) {
    const LocalInvariants x = local_invariants(materialize(g, 4));
    inv = std::max({inv, std::abs(x.chi1), std::abs(x.chi2 - 1.0)});
    time = std::max(time, std::abs(protocol_gate_time(g, 1.0).t_star - pi / 2));
    time = std::max(time, std::abs(protocol_gate_time(g, 2.5).t_star - pi / 5));
  }
  for (const AlgebraCheck& c : cartan_algebra_checks()) closure = std::max(closure, c.residual);

  double local = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = make_rng("ac9", kSeed, i);
    const ComplexMatrix u = random_unitary(4, rng);
    const ComplexMatrix v1 = random_local_unitary(rng);
    const ComplexMatrix v2 = random_local_unitary(rng);
    const LocalInvariants a = local_invariants(u);
    const LocalInvariants b = local_invariants(v1 * u * v2);
    local = std::max({local, std::abs(a.chi1.real() - b.chi1.real()), std::abs(a.chi1.imag() - b.chi1.imag()),
                      std::abs(a.chi2 - b.chi2)});
  }
  require(o, inv <= kAc9InvTol, "invariants off");
  require(o, time <= kAc9TimeTol, "gate times off");
  require(o, local <= kAc9LocalTol, "local equivalence broken");
  require(o, closure <= kAc9ClosureTol, "closure residual too large");
  o.detail << "invariant err " << inv << ", time err " << time << ", local-equivalence err " << local
           << ", closure residual " << closure;
}

void ac10(Outcome& o) {
  const std::vector<ModelSpec> specs{
      ModelSpec::non_interacting(2, FieldAxis::longitudinal()), ModelSpec::non_interacting(2, FieldAxis::transverse()),
      ModelSpec::ising(FieldAxis::longitudinal(), 1.0, 0.5), ModelSpec::xxz(FieldAxis::transverse(), 1.0, 1.5, 0.4)};
  std::size_t gains = 0, tight = 0, nogain = 0;
  double excess = 0.0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = make_rng("ac10", kSeed, i);
    const DensityMatrix rho = random_density_matrix(2, rng);
    const ModelSpec& spec = specs[i % specs.size()];
    const ProtocolReport r = run_protocol(rho, spec);
    const double best = std::max({r.c1, r.c2, r.c3});
    const double oracle = exhaustive_best_sub(rho, spec, 2);
    excess = std::max(excess, best - oracle);
    const std::string at = "state " + std::to_string(i);
    require(o, best <= oracle + kAc10Tol, at + ": protocol exceeds the oracle");
    switch (r.verdict) {
      case Verdict::Gain:
        ++gains;
        require(o, oracle > r.c1 + kAc10Tol, at + ": Gain but the oracle finds no improvement");
        break;
      case Verdict::AlreadyTight:
        ++tight;
        require(o, oracle <= r.c1 + kAc10Tol, at + ": AlreadyTight but the oracle improves");
        break;
      case Verdict::NoGain:
        ++nogain;
        break;
    }
    const double replay = sub_capacity(apply_gates(rho, r.gates_applied), spec);
    require(o, std::abs(replay - best) <= kAc10Tol, at + ": replayed path disagrees");
  }
  o.detail << "200 states: " << gains << " Gain, " << nogain << " NoGain, " << tight
           << " AlreadyTight; max protocol - oracle " << excess;
}

}  // namespace

int main() {
  std::printf("qbcap acceptance (seed 0x%llX, OpenMP %s)\n", static_cast<unsigned long long>(kSeed),
              parallel_available() ? "on" : "off");
  report("AC1", "Bell-family example", ac1);
  report("AC2", "Ising-family example and sweep", ac2);
  report("AC3", "critical coupling law", ac3);
  report("AC4", "two-qubit trade-off suite", ac4);
  report("AC5", "three-qubit trade-off suite", ac5);
  report("AC6", "marginal-spectrum suites", ac6);
  report("AC7", "gate-identity suites", ac7);
  report("AC8", "gain-condition implication", ac8);
  report("AC9", "minimal gate time", ac9);
  report("AC10", "protocol vs exhaustive oracle", ac10);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
