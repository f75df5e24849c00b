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

#include <string_view>

#include "ybc/angles.hpp"

namespace ybc {

inline constexpr double kDefaultZeroTol = 1e-12;

/// Exchange couplings (Jx, Jy, Jz) of the nearest-neighbour Heisenberg chain
/// H = -sum_a J_a sum_i s^a_i s^a_{i+1}. hbar is 1; all inputs are
/// dimensionless.
struct CouplingParams {
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;
};

/// Which coupling axes are active. XYZ is outside the compressible family.
enum class HamiltonianClass { X, Y, Z, XY, XZ, YZ, XYZ };

std::string_view to_string(HamiltonianClass c);
/// Parses "X", "XY", ... (case-insensitive). Throws InvalidArgument.
HamiltonianClass parse_hamiltonian_class(std::string_view text);

bool has_x(HamiltonianClass c);
bool has_y(HamiltonianClass c);
bool has_z(HamiltonianClass c);
/// Class with the given active axes; all-inactive maps to X (identity
/// dynamics).
HamiltonianClass class_from_axes(bool x, bool y, bool z);

/// Time grid for a first-order Trotter evolution.
struct TrotterPlan {
  double t_final = 0.0;
  double dt = 0.0;
  int num_steps = 0;

  /// num_steps = round(t_final / dt). Rejects dt <= 0, dt > t_final and
  /// non-finite inputs.
  static TrotterPlan make(double t_final, double dt);

  double time_at(int step) const { return step * dt; }
};

/// Validates finiteness. Throws InvalidArgument naming the offending field.
void validate(const CouplingParams& j);

/// Class of J with |J_a| <= zero_tol treated as zero.
HamiltonianClass classify(const CouplingParams& j, double zero_tol = kDefaultZeroTol);

/// theta_a = J_a * dt.
Angles3 step_angles(const CouplingParams& j, double dt);

}  // namespace ybc
