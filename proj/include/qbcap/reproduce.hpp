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

// Worked-example states and the fixed sweep tables behind `qbcap reproduce`.

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qbcap/hamiltonians.hpp"
#include "qbcap/linalg.hpp"

namespace qbcap {

/// (1/2)[[1,0,0,b],[0,0,0,0],[0,0,0,0],[b,0,0,1]], 0 <= b <= 1.
DensityMatrix bell_family_state(double b);
/// (1/6)[[2,a,0,0],[a,1,0,0],[0,0,1,a],[0,0,a,2]], 0 <= a <= sqrt(2).
DensityMatrix ising_family_state(double a);

/// Longitudinal XX with E = alpha = J = 1.
ModelSpec bell_family_model();
ModelSpec ising_family_model(FieldAxis axis, double J);

/// b = 0, 0.05, ..., 1 (21 points).
std::vector<double> bell_grid();
/// 65 evenly spaced points on [0, sqrt(2)].
std::vector<double> ising_grid();
/// J values of the sweep panels.
const std::vector<double>& ising_couplings();

/// Closed forms for the Ising family under the + coupling convention;
/// s = sqrt(4a^2 + 1).
struct IsingFamilyClosedForm {
  double total;
  double sub_before;
  double sub_after;  ///< after U34
  double residual_before;
  double residual_after;
};
IsingFamilyClosedForm ising_family_closed_form(AxisKind axis, double a, double J);

struct CsvTable {
  std::vector<std::string> comments;  ///< written as "# ..." lines
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

enum class ReproduceTarget { Example1, Example2, Fig3, GateTimes };
/// Accepts "example1", "example2", "fig3", "gatetimes"; throws InvalidArgument.
ReproduceTarget parse_reproduce_target(std::string_view name);

CsvTable reproduce(ReproduceTarget target);
void write_csv(std::ostream& out, const CsvTable& table);

}  // namespace qbcap
