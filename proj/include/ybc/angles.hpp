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

namespace ybc {

/// Rotation angles of the two-spin XYZ propagator
/// exp(i (theta_x XX + theta_y YY + theta_z ZZ)), in radians.
struct Angles3 {
  double theta_x = 0.0;
  double theta_y = 0.0;
  double theta_z = 0.0;

  friend bool operator==(const Angles3&, const Angles3&) = default;
};

/// Parameters of R(gamma, delta) = exp(i (gamma XX + delta ZZ)): gamma is the
/// XX-type rotation, delta the ZZ-type phase.
struct RGateParams {
  double gamma = 0.0;
  double delta = 0.0;

  friend bool operator==(const RGateParams&, const RGateParams&) = default;
};

/// Local frame change applied around an R gate: U1 = Rz(pi/2) on both qubits
/// maps XX to YY, U2 = Rx(pi/2) on both qubits maps ZZ to YY.
enum class Conjugation { None, U1, U2 };

std::string_view to_string(Conjugation c);

/// Reduces an angle to (-pi, pi].
double canonicalize_angle(double angle);

Angles3 canonicalize(const Angles3& a);
RGateParams canonicalize(const RGateParams& p);

bool is_finite(const Angles3& a);
bool is_finite(const RGateParams& p);

}  // namespace ybc
