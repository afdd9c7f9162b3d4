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

#include "qbcap/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace qbcap {

namespace {

[[noreturn]] void bad_spec(const std::string& why) { throw Error(ErrorKind::BadSpec, why); }

double number_field(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) bad_spec(std::string("'") + key + "' must be a number");
  return j[key].get<double>();
}

ModelKind parse_model_kind(const std::string& s) {
  for (ModelKind k : {ModelKind::NonInteracting, ModelKind::Ising, ModelKind::XX, ModelKind::XXZ, ModelKind::XXX,
                      ModelKind::Custom}) {
    if (to_string(k) == s) return k;
  }
  bad_spec("unknown model '" + s + "'");
}

Json gate_json(const PermutationGate& g) { return Json::array({g.i, g.j}); }

Json gates_json(const std::vector<PermutationGate>& gates) {
  Json a = Json::array();
  for (const auto& g : gates) a.push_back(gate_json(g));
  return a;
}

}  // namespace

ModelSpec model_from_json(const Json& j) {
  if (!j.is_object()) bad_spec("model must be a JSON object");
  static const std::set<std::string> known{"qubits", "axis", "E", "J", "alpha", "beta", "model", "matrix"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) bad_spec("unknown model key '" + key + "'");

  ModelSpec s;
  if (j.contains("qubits")) {
    if (!j["qubits"].is_number_integer()) bad_spec("'qubits' must be an integer");
    s.qubits = j["qubits"].get<int>();
  }
  if (j.contains("model")) {
    if (!j["model"].is_string()) bad_spec("'model' must be a string");
    s.model = parse_model_kind(j["model"].get<std::string>());
  }
  if (j.contains("axis")) {
    const Json& a = j["axis"];
    if (a.is_string() && a == "transverse") {
      s.axis = FieldAxis::transverse();
    } else if (a.is_string() && a == "longitudinal") {
      s.axis = FieldAxis::longitudinal();
    } else if (a.is_array() && a.size() == 3 && a[0].is_number() && a[1].is_number() && a[2].is_number()) {
      s.axis = FieldAxis::general(a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
    } else {
      bad_spec("'axis' must be \"transverse\", \"longitudinal\" or [E1, E2, E3]");
    }
  }
  s.E = number_field(j, "E", 1.0);
  s.J = number_field(j, "J", 0.0);

  double alpha = 0.0, beta = 0.0;
  switch (s.model) {
    case ModelKind::Ising: beta = 1.0; break;
    case ModelKind::XX: alpha = 1.0; break;
    case ModelKind::XXZ:
      if (!j.contains("alpha")) bad_spec("XXZ needs an explicit 'alpha'");
      beta = 1.0;
      break;
    case ModelKind::XXX: alpha = beta = 1.0; break;
    default: break;
  }
  s.alpha = number_field(j, "alpha", alpha);
  s.beta = number_field(j, "beta", beta);

  if (j.contains("matrix")) {
    if (s.model != ModelKind::Custom) bad_spec("'matrix' is only valid for Custom models");
    try {
      s.custom = matrix_from_json(j["matrix"]);
    } catch (const Error& e) {
      bad_spec(std::string("bad 'matrix': ") + e.what());
    }
    if (!j.contains("qubits")) s.qubits = s.custom->dim() == 8 ? 3 : 2;
  }
  s.validate();
  return s;
}

Json to_json(const ModelSpec& spec) {
  Json j;
  j["qubits"] = spec.qubits;
  if (spec.axis.kind == AxisKind::General) {
    j["axis"] = Json::array({spec.axis.components[0], spec.axis.components[1], spec.axis.components[2]});
  } else {
    j["axis"] = std::string(to_string(spec.axis.kind));
  }
  j["E"] = spec.E;
  j["J"] = spec.J;
  j["alpha"] = spec.alpha;
  j["beta"] = spec.beta;
  j["model"] = std::string(to_string(spec.model));
  if (spec.custom) j["matrix"] = matrix_to_json(*spec.custom);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  auto fail = [](const std::string& why) -> ComplexMatrix { throw Error(ErrorKind::InvalidState, why); };
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) return fail("expected {\"dim\", \"entries\"}");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() <= 0) return fail("'dim' must be a positive integer");
  const auto dim = j["dim"].get<std::size_t>();
  const Json& e = j["entries"];
  if (!e.is_array() || e.size() != dim * dim)
    return fail("'entries' must hold dim*dim = " + std::to_string(dim * dim) + " [re, im] pairs");
  std::vector<cplx> v;
  v.reserve(e.size());
  for (const auto& x : e) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_number() || !x[1].is_number())
      return fail("each entry must be a [re, im] pair of numbers");
    v.emplace_back(x[0].get<double>(), x[1].get<double>());
  }
  return ComplexMatrix(dim, std::move(v));
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json e = Json::array();
  for (const cplx& z : m.entries()) e.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"dim", m.dim()}, {"entries", e}};
}

DensityMatrix state_from_json(const Json& j) { return DensityMatrix(matrix_from_json(j)); }

Json state_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

Json to_json(const CapacityBreakdown& b) {
  Json j;
  j["total"] = b.total;
  j["sub_A"] = b.sub_A;
  j["sub_B"] = b.sub_B;
  if (b.sub_C) j["sub_C"] = *b.sub_C;
  j["sub_sum"] = b.sub_sum;
  j["residual"] = b.residual;
  j["sub_ic"] = b.sub_ic;
  j["sub_c"] = b.sub_c;
  return j;
}

Json to_json(const ProtocolReport& r) {
  Json j;
  j["c1"] = r.c1;
  j["c2"] = r.c2;
  j["c3"] = r.c3;
  j["gates"] = gates_json(r.gates_applied);
  j["initial_residual"] = r.initial_residual;
  j["final_residual"] = r.final_residual;
  j["verdict"] = std::string(to_string(r.verdict));
  if (r.qubits == 3) j["family"] = r.family;
  j["total"] = r.total;
  j["target"] = r.target;
  j["reorder_gates"] = gates_json(r.reorder_gates);
  j["step3_gate"] = r.step3_gate ? gate_json(*r.step3_gate) : Json(nullptr);
  Json cands = Json::array();
  for (const auto& [g, c] : r.candidates) cands.push_back(Json{{"gate", gate_json(g)}, {"sub", c}});
  j["step3_candidates"] = cands;
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const GateTime& t) {
  return Json{{"gate", gate_json(t.gate)}, {"J", t.J}, {"t_star", t.t_star}};
}

Json to_json(const QmpReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations()) v.push_back(Json{{"inequality_id", x.id}, {"slack", x.slack}});
  Json all = Json::array();
  for (const auto& x : r.inequalities) all.push_back(Json{{"inequality_id", x.id}, {"slack", x.slack}});
  return Json{{"ok", r.ok()}, {"violations", v}, {"inequalities", all}};
}

Json to_json(const SuiteResult& r) {
  Json j;
  j["suite"] = std::string(to_string(r.suite));
  j["n"] = r.n;
  j["violations"] = r.violations;
  j["max_violation_magnitude"] = r.max_violation_magnitude;
  j["seconds"] = r.seconds;
  j["seed"] = r.seed;
  j["first_offending_index"] = r.first_offender ? Json(*r.first_offender) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& t : r.tallies) {
    Json c{{"id", t.id}, {"evaluated", t.evaluated}, {"violations", t.violations}, {"max_violation", t.max_violation}};
    if (t.first_offender) c["first_offending_index"] = *t.first_offender;
    checks.push_back(c);
  }
  j["checks"] = checks;
  return j;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string csv_join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += format_number(values[k]);
  }
  return out;
}

std::string csv_header(const CapacityBreakdown& b) {
  return b.sub_C ? "total,sub_A,sub_B,sub_C,sub_sum,residual,sub_ic,sub_c"
                 : "total,sub_A,sub_B,sub_sum,residual,sub_ic,sub_c";
}

std::string csv_row(const CapacityBreakdown& b) {
  std::vector<double> v{b.total, b.sub_A, b.sub_B};
  if (b.sub_C) v.push_back(*b.sub_C);
  v.insert(v.end(), {b.sub_sum, b.residual, b.sub_ic, b.sub_c});
  return csv_join(v);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace qbcap
