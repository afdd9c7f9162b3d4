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

// JSON and CSV serialisation.
//
// ModelSpec JSON keys: qubits, axis, E, J, alpha, beta, model, plus "matrix"
// for Custom models. axis is "transverse", "longitudinal" or an [E1, E2, E3]
// array for a general field. Omitted alpha/beta take the model's fixed values
// (XXZ needs an explicit alpha).
//
// State / matrix JSON: {"dim": d, "entries": [[re, im], ...]} row-major.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qbcap/capacity.hpp"
#include "qbcap/mintime.hpp"
#include "qbcap/protocol2.hpp"
#include "qbcap/qmp.hpp"
#include "qbcap/verify.hpp"

namespace qbcap {

using Json = nlohmann::ordered_json;

/// Throws BadSpec on missing, unknown or ill-typed keys and on spec violations.
ModelSpec model_from_json(const Json& j);
Json to_json(const ModelSpec& spec);

/// Throws InvalidState on malformed JSON or when the matrix is not a state.
DensityMatrix state_from_json(const Json& j);
Json state_to_json(const DensityMatrix& rho);
ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);

Json to_json(const CapacityBreakdown& b);
Json to_json(const ProtocolReport& r);
Json to_json(const GateTime& t);
Json to_json(const QmpReport& r);
Json to_json(const SuiteResult& r);

/// Column order: total, sub_A, sub_B, [sub_C], sub_sum, residual, sub_ic, sub_c.
std::string csv_header(const CapacityBreakdown& b);
std::string csv_row(const CapacityBreakdown& b);

/// 12 significant digits, '.' separator, independent of the C locale.
std::string format_number(double v);
std::string csv_join(const std::vector<double>& values);

/// Reads the file at `path` and parses it as JSON; throws InvalidArgument.
Json read_json_file(const std::string& path);

}  // namespace qbcap
