// Copyright 2026 The ybcompress Authors
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

#pragma once

// Job configuration: a JSON document whose fields can each be overridden
// from the command line.
//
//   {"J": {"x": -0.8, "y": -0.2, "z": 0.0}, "spins": 3, "t_final": 2.5,
//    "dt": 0.025, "init": "neel",
//    "noise": {"p1": 0.0, "p2": 0.01, "shots": 8192, "seed": 7}}
//
// "model" (a class name such as "XY") sets unit couplings on its axes; an
// explicit "J" takes precedence.

#include <optional>
#include <string>
#include <string_view>

#include "ybc/simulator.hpp"
#include "ybc/spin_model.hpp"

namespace ybc::cli {

struct JobConfig {
  std::optional<HamiltonianClass> model;
  std::optional<CouplingParams> j;
  int spins = 3;
  double t_final = 2.5;
  double dt = 0.025;
  std::string init = "neel";  // "neel" or "basis:<bits>"
  std::optional<NoiseModel> noise;
};

/// Throws InvalidArgument naming the offending field.
JobConfig parse_config(std::string_view json_text);
JobConfig load_config(const std::string& path);

/// Checks every field against the model guards.
void validate(const JobConfig& c);

CouplingParams couplings(const JobConfig& c);
TrotterPlan plan(const JobConfig& c);
StateVector initial_state(const JobConfig& c);

}  // namespace ybc::cli
