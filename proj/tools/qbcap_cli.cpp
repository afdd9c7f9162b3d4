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

// qbcap command-line interface. Machine-readable output goes to stdout,
// diagnostics to stderr.
//
// Exit codes: 0 ok, 1 usage or internal error, 2 invalid state, 3 invalid
// model, 4 write failure, 5 violations found.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qbcap/capacity.hpp"
#include "qbcap/io.hpp"
#include "qbcap/mintime.hpp"
#include "qbcap/protocol2.hpp"
#include "qbcap/protocol3.hpp"
#include "qbcap/qmp.hpp"
#include "qbcap/reproduce.hpp"
#include "qbcap/sampling.hpp"
#include "qbcap/verify.hpp"

namespace {

using namespace qbcap;

enum Exit : int { kOk = 0, kFailure = 1, kBadState = 2, kBadModel = 3, kWriteFailure = 4, kViolations = 5 };

// Thrown to unwind with a specific exit code after printing a diagnostic.
struct ExitWith {
  int code;
};

[[noreturn]] void fail(int code, const std::string& msg) {
  std::cerr << "qbcap: " << msg << '\n';
  throw ExitWith{code};
}

DensityMatrix load_state(const std::string& path) {
  try {
    return state_from_json(read_json_file(path));
  } catch (const Error& e) {
    fail(kBadState, "invalid state '" + path + "': " + e.what());
  }
}

// --model takes a file path or an inline JSON object.
ModelSpec load_model(const std::string& arg) {
  try {
    const bool inline_json = arg.find('{') != std::string::npos;
    Json j;
    if (inline_json) {
      try {
        j = Json::parse(arg);
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadSpec, std::string("inline model is not valid JSON: ") + e.what());
      }
    } else {
      j = read_json_file(arg);
    }
    return model_from_json(j);
  } catch (const Error& e) {
    fail(kBadModel, std::string("invalid model: ") + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct Common {
  std::string state;
  std::string model;
  std::optional<int> qubits;
  bool csv = false;
};

int cmd_capacity(const Common& c) {
  const DensityMatrix rho = load_state(c.state);
  const ModelSpec spec = load_model(c.model);
  if (rho.qubits() != spec.qubits)
    fail(kBadModel, "model has " + std::to_string(spec.qubits) + " qubits but the state has " +
                        std::to_string(rho.qubits()));
  const CapacityBreakdown b = subsystem_capacities(rho, spec);
  if (c.csv) {
    std::cout << "# model: " << to_json(spec).dump() << '\n' << csv_header(b) << '\n' << csv_row(b) << '\n';
  } else {
    emit(to_json(b));
  }
  return kOk;
}

int cmd_protocol(const Common& c) {
  const DensityMatrix rho = load_state(c.state);
  const ModelSpec spec = load_model(c.model);
  const int qubits = c.qubits.value_or(rho.qubits());
  if (qubits != rho.qubits()) fail(kBadState, "--qubits does not match the state dimension");
  if (spec.qubits != qubits) fail(kBadModel, "model qubit count does not match the state");
  const ProtocolReport r = qubits == 2 ? run_protocol(rho, spec) : run_protocol_3q(rho, spec);
  for (const auto& w : r.warnings) std::cerr << "qbcap: warning: " << w << '\n';
  emit(to_json(r));
  return kOk;
}

int cmd_reproduce(const std::string& target_name, const std::string& out_path) {
  ReproduceTarget target;
  try {
    target = parse_reproduce_target(target_name);
  } catch (const Error& e) {
    fail(kFailure, e.what());
  }
  const CsvTable table = reproduce(target);
  if (out_path.empty() || out_path == "-") {
    write_csv(std::cout, table);
    return kOk;
  }
  std::ofstream out(out_path);
  if (!out) fail(kWriteFailure, "cannot open '" + out_path + "' for writing");
  write_csv(out, table);
  out.flush();
  if (!out) fail(kWriteFailure, "write to '" + out_path + "' failed");
  std::cerr << "qbcap: wrote " << table.rows.size() << " rows to " << out_path << '\n';
  return kOk;
}

int cmd_verify(const std::string& suite_name, std::size_t n, std::uint64_t seed, bool serial) {
  Suite suite;
  try {
    suite = parse_suite(suite_name);
  } catch (const Error& e) {
    fail(kFailure, e.what());
  }
  if (n == 0) fail(kFailure, "--n must be at least 1");
  const SuiteResult r = run_suite(suite, n, seed, serial ? Execution::Serial : Execution::Parallel);
  emit(to_json(r));
  if (r.violations == 0) return kOk;
  for (const auto& t : r.tallies)
    if (t.violations)
      std::cerr << "qbcap: violation in '" << t.id << "': " << t.violations << " of " << t.evaluated
                << ", max " << t.max_violation << ", first at sample index " << *t.first_offender << " (seed "
                << seed << ")\n";
  return kViolations;
}

int cmd_mintime(const std::string& gate, double J, const std::string& unitary_path) {
  if (!unitary_path.empty()) {
    ComplexMatrix u;
    try {
      u = matrix_from_json(read_json_file(unitary_path));
      const LocalInvariants inv = local_invariants(u);
      emit(Json{{"chi1", Json::array({inv.chi1.real(), inv.chi1.imag()})}, {"chi2", inv.chi2}});
    } catch (const Error& e) {
      fail(kFailure, std::string("invalid unitary: ") + e.what());
    }
    return kOk;
  }
  try {
    if (!gate.empty()) {
      const auto comma = gate.find(',');
      const int i = std::stoi(gate.substr(0, comma == std::string::npos ? 1 : comma));
      const int j = std::stoi(gate.substr(comma == std::string::npos ? 1 : comma + 1));
      emit(to_json(protocol_gate_time(PermutationGate::make(i, j), J)));
      return kOk;
    }
    Json all = Json::array();
    for (const PermutationGate g : {PermutationGate{1, 4}, PermutationGate{2, 3}, PermutationGate{1, 2},
                                    PermutationGate{3, 4}, PermutationGate{1, 3}, PermutationGate{2, 4}})
      all.push_back(to_json(protocol_gate_time(g, J)));
    emit(all);
  } catch (const Error& e) {
    fail(kFailure, e.what());
  } catch (const std::logic_error&) {
    fail(kFailure, "--gate expects two indices such as 14 or 1,4");
  }
  return kOk;
}

int cmd_qmp(const std::string& state_path, const std::string& scenario_path) {
  QmpReport rep;
  if (!state_path.empty()) {
    rep = check_state(load_state(state_path));
  } else {
    Json j;
    try {
      j = read_json_file(scenario_path);
    } catch (const Error& e) {
      fail(kFailure, e.what());
    }
    auto spectrum = [&](const char* key) {
      if (!j.contains(key) || !j[key].is_array()) fail(kFailure, std::string("scenario needs an array '") + key + "'");
      return Spectrum::from_values(j[key].get<std::vector<double>>());
    };
    try {
      if (j.contains("deltas")) {
        auto d = j["deltas"].get<std::vector<double>>();
        if (d.size() != 3) fail(kFailure, "'deltas' needs three values");
        std::sort(d.begin(), d.end());
        rep = check_3q({spectrum("global"), {d[0], d[1], d[2]}});
      } else {
        rep = check_2q({spectrum("global"), spectrum("local_A"), spectrum("local_B")});
      }
    } catch (const Error& e) {
      fail(kFailure, e.what());
    } catch (const nlohmann::json::exception& e) {
      fail(kFailure, e.what());
    }
  }
  emit(to_json(rep));
  return rep.ok() ? kOk : kViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum battery capacity toolkit"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool needs_model) {
    sub->add_option("--state", common.state, "State JSON file {dim, entries}")->required();
    auto* m = sub->add_option("--model", common.model, "Model JSON file or inline object");
    if (needs_model) m->required();
  };

  auto* capacity = app.add_subcommand("capacity", "Capacity breakdown of a state");
  add_common(capacity, true);
  capacity->add_flag("--csv", common.csv, "Emit one CSV row instead of JSON");
  capacity->add_flag("--json", "Emit JSON (default)");

  auto* protocol = app.add_subcommand("protocol", "Run the incoherent-operation protocol");
  add_common(protocol, true);
  protocol->add_option("--qubits", common.qubits, "2 or 3 (defaults to the state's)")->check(CLI::IsMember({2, 3}));

  std::string target, out_path;
  auto* repro = app.add_subcommand("reproduce", "Emit CSV data for a worked example or sweep");
  repro->add_option("target", target, "example1 | example2 | fig3 | gatetimes")->required();
  repro->add_option("--out", out_path, "Output path ('-' for stdout)");
  repro->add_flag("--csv", "CSV output (the only format)");

  std::string suite;
  std::size_t n = 1000;
  std::uint64_t seed = kDefaultSeed;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "tradeoff2 | tradeoff3 | qmp | theorem2 | theorem4 | gate-identities | table1 | cartan")
      ->required();
  verify->add_option("--n", n, "Number of samples");
  verify->add_option("--seed", seed, "64-bit seed (default 0x5EED0B0CA9)");
  verify->add_flag("--serial", serial, "Use the serial reference kernel");
  verify->add_flag("--json", "JSON output (default)");

  std::string gate, unitary;
  double J = 1.0;
  auto* mintime = app.add_subcommand("mintime", "Minimal gate times or local invariants");
  mintime->add_option("--gate", gate, "Protocol gate, e.g. 14 or 1,4 (default: all six)");
  mintime->add_option("--J", J, "Coupling strength");
  mintime->add_option("--unitary", unitary, "Matrix JSON file; prints its local invariants");

  std::string qmp_state, scenario;
  auto* qmp = app.add_subcommand("qmp-check", "Marginal-spectrum compatibility conditions");
  auto* qs = qmp->add_option("--state", qmp_state, "State JSON file");
  auto* qc = qmp->add_option("--scenario", scenario,
                             "JSON {global, local_A, local_B} or {global, deltas} with raw spectra");
  qs->excludes(qc);
  qmp->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*capacity) return cmd_capacity(common);
    if (*protocol) return cmd_protocol(common);
    if (*repro) return cmd_reproduce(target, out_path);
    if (*verify) return cmd_verify(suite, n, seed, serial);
    if (*mintime) return cmd_mintime(gate, J, unitary);
    if (*qmp) return cmd_qmp(qmp_state, scenario);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "qbcap: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
