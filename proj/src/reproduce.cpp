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

#include "qbcap/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qbcap/capacity.hpp"
#include "qbcap/io.hpp"
#include "qbcap/mintime.hpp"
#include "qbcap/protocol2.hpp"

namespace qbcap {

DensityMatrix bell_family_state(double b) {
  if (!(b >= 0.0 && b <= 1.0)) throw Error(ErrorKind::InvalidArgument, "b must lie in [0, 1]");
  return DensityMatrix(ComplexMatrix{{0.5, 0, 0, 0.5 * b}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0.5 * b, 0, 0, 0.5}});
}

DensityMatrix ising_family_state(double a) {
  if (!(a >= 0.0 && a <= std::numbers::sqrt2 + 1e-12))
    throw Error(ErrorKind::InvalidArgument, "a must lie in [0, sqrt(2)]");
  const double x = a / 6.0;
  return DensityMatrix(ComplexMatrix{{2.0 / 6, x, 0, 0}, {x, 1.0 / 6, 0, 0}, {0, 0, 1.0 / 6, x}, {0, 0, x, 2.0 / 6}});
}

ModelSpec bell_family_model() { return ModelSpec::xx(FieldAxis::longitudinal(), 1.0, 1.0, 1.0); }

ModelSpec ising_family_model(FieldAxis axis, double J) { return ModelSpec::ising(axis, 1.0, J); }

std::vector<double> bell_grid() {
  std::vector<double> g;
  for (int k = 0; k <= 20; ++k) g.push_back(k * 0.05);
  return g;
}

std::vector<double> ising_grid() {
  std::vector<double> g;
  for (int k = 0; k < 65; ++k) g.push_back(std::numbers::sqrt2 * k / 64.0);
  g.back() = std::numbers::sqrt2;
  return g;
}

const std::vector<double>& ising_couplings() {
  static const std::vector<double> j{0.4, 0.8, 1.2};
  return j;
}

IsingFamilyClosedForm ising_family_closed_form(AxisKind axis, double a, double J) {
  const double s = std::sqrt(4 * a * a + 1);
  IsingFamilyClosedForm f{};
  if (axis == AxisKind::Transverse) {
    f.total = s / 3 * (std::sqrt(8 + J * J) + J);
    f.sub_before = 4 * std::numbers::sqrt2 * a / 3;
    f.sub_after = 2 * std::numbers::sqrt2 * s / 3;
  } else if (axis == AxisKind::Longitudinal) {
    f.total = (J <= 1.0 ? 2.0 : 2.0 * J) * s / 3;
    f.sub_before = 4 * a / 3;
    f.sub_after = 2 * s / 3;
  } else {
    throw Error(ErrorKind::InvalidArgument, "closed forms exist for transverse and longitudinal fields only");
  }
  f.residual_before = f.total - f.sub_before;
  f.residual_after = f.total - f.sub_after;
  return f;
}

ReproduceTarget parse_reproduce_target(std::string_view name) {
  if (name == "example1") return ReproduceTarget::Example1;
  if (name == "example2") return ReproduceTarget::Example2;
  if (name == "fig3") return ReproduceTarget::Fig3;
  if (name == "gatetimes") return ReproduceTarget::GateTimes;
  throw Error(ErrorKind::InvalidArgument, "unknown reproduce target '" + std::string(name) + "'");
}

namespace {

std::string gate_list(const std::vector<PermutationGate>& gates) {
  std::string out;
  for (const auto& g : gates) out += (out.empty() ? "" : " ") + g.name();
  return out;
}

std::string num(double v) { return format_number(v); }

CsvTable example1_table() {
  const ModelSpec spec = bell_family_model();
  CsvTable t;
  t.comments = {"target: example1", "model: " + to_json(spec).dump(),
                "state: (1/2)[[1,0,0,b],[0,0,0,0],[0,0,0,0],[b,0,0,1]]",
                "sub_after: best Sub found by the protocol; sub_U34: Sub after U34 alone"};
  t.header = {"b", "total", "initial_residual", "sub_before", "sub_after", "final_residual", "sub_U34", "verdict",
              "gates"};
  for (double b : bell_grid()) {
    const DensityMatrix rho = bell_family_state(b);
    const ProtocolReport r = run_protocol(rho, spec);
    const double best = std::max({r.c1, r.c2, r.c3});
    const double u34 = sub_capacity(apply_gate(rho, {3, 4}), spec);
    t.rows.push_back({num(b), num(r.total), num(r.initial_residual), num(r.c1), num(best), num(r.final_residual),
                      num(u34), std::string(to_string(r.verdict)), gate_list(r.gates_applied)});
  }
  return t;
}

CsvTable example2_table() {
  CsvTable t;
  t.comments = {"target: example2", "state: (1/6)[[2,a,0,0],[a,1,0,0],[0,0,1,a],[0,0,a,2]]",
                "after: the state conjugated by U34; *_closed columns use sqrt(8+J^2) in the transverse total"};
  for (const FieldAxis& ax : {FieldAxis::transverse(), FieldAxis::longitudinal()})
    for (double J : ising_couplings()) t.comments.push_back("model: " + to_json(ising_family_model(ax, J)).dump());
  t.header = {"field",          "J",         "a",         "total",          "total_closed",
              "residual_before", "residual_before_closed", "residual_after", "residual_after_closed",
              "sub_before",     "sub_after", "protocol_sub", "protocol_gates"};
  for (const FieldAxis& ax : {FieldAxis::transverse(), FieldAxis::longitudinal()})
    for (double J : ising_couplings()) {
      const ModelSpec spec = ising_family_model(ax, J);
      const Hamiltonian h = build_hamiltonian(spec);
      for (double a : ising_grid()) {
        const DensityMatrix rho = ising_family_state(a);
        const CapacityBreakdown before = subsystem_capacities(rho, spec, h);
        const CapacityBreakdown after = subsystem_capacities(apply_gate(rho, {3, 4}), spec, h);
        const IsingFamilyClosedForm cf = ising_family_closed_form(ax.kind, a, J);
        const ProtocolReport r = run_protocol(rho, spec);
        t.rows.push_back({std::string(to_string(ax.kind)), num(J), num(a), num(before.total), num(cf.total),
                          num(before.residual), num(cf.residual_before), num(after.residual), num(cf.residual_after),
                          num(before.sub_sum), num(after.sub_sum), num(std::max({r.c1, r.c2, r.c3})),
                          gate_list(r.gates_applied)});
      }
    }
  return t;
}

CsvTable fig3_table() {
  CsvTable t;
  t.comments = {"target: fig3",
                "panel a: transverse residual before/after; panel b: Sub before/after (both fields, J-independent);",
                "panels c,d: longitudinal residual before/after. 'after' means conjugation by U34"};
  for (const FieldAxis& ax : {FieldAxis::transverse(), FieldAxis::longitudinal()})
    for (double J : ising_couplings()) t.comments.push_back("model: " + to_json(ising_family_model(ax, J)).dump());
  t.header = {"panel", "field", "J", "a", "series", "value"};
  auto add = [&](const char* panel, const FieldAxis& ax, double J, double a, const char* series, double v) {
    t.rows.push_back({panel, std::string(to_string(ax.kind)), num(J), num(a), series, num(v)});
  };
  for (const FieldAxis& ax : {FieldAxis::transverse(), FieldAxis::longitudinal()})
    for (double J : ising_couplings()) {
      const ModelSpec spec = ising_family_model(ax, J);
      const Hamiltonian h = build_hamiltonian(spec);
      const char* panel = ax.kind == AxisKind::Transverse ? "a" : "cd";
      for (double a : ising_grid()) {
        const DensityMatrix rho = ising_family_state(a);
        const CapacityBreakdown before = subsystem_capacities(rho, spec, h);
        const CapacityBreakdown after = subsystem_capacities(apply_gate(rho, {3, 4}), spec, h);
        add(panel, ax, J, a, "residual_before", before.residual);
        add(panel, ax, J, a, "residual_after", after.residual);
      }
    }
  const double J = ising_couplings().front();
  for (const FieldAxis& ax : {FieldAxis::transverse(), FieldAxis::longitudinal()}) {
    const ModelSpec spec = ising_family_model(ax, J);
    for (double a : ising_grid()) {
      const DensityMatrix rho = ising_family_state(a);
      add("b", ax, J, a, "sub_before", sub_capacity(rho, spec));
      add("b", ax, J, a, "sub_after", sub_capacity(apply_gate(rho, {3, 4}), spec));
    }
  }
  return t;
}

CsvTable gatetimes_table() {
  CsvTable t;
  t.comments = {"target: gatetimes", "minimal time under an Ising/XXZ drift with J = 1"};
  t.header = {"gate", "i", "j", "J", "a1", "a2", "a3", "chi1_re", "chi1_im", "chi2", "t_star"};
  static const PermutationGate gates[] = {{1, 4}, {2, 3}, {1, 2}, {3, 4}, {1, 3}, {2, 4}};
  for (const auto& g : gates) {
    const GateTime gt = protocol_gate_time(g, 1.0);
    const LocalInvariants inv = local_invariants(materialize(g, 4));
    t.rows.push_back({g.name(), std::to_string(g.i), std::to_string(g.j), num(gt.J), num(gt.coords.a1),
                      num(gt.coords.a2), num(gt.coords.a3), num(inv.chi1.real()), num(inv.chi1.imag()),
                      num(inv.chi2), num(gt.t_star)});
  }
  return t;
}

}  // namespace

CsvTable reproduce(ReproduceTarget target) {
  switch (target) {
    case ReproduceTarget::Example1: return example1_table();
    case ReproduceTarget::Example2: return example2_table();
    case ReproduceTarget::Fig3: return fig3_table();
    case ReproduceTarget::GateTimes: return gatetimes_table();
  }
  throw Error(ErrorKind::InvalidArgument, "unknown reproduce target");
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (const auto& c : table.comments) out << "# " << c << '\n';
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
    out << '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
}

}  // namespace qbcap
