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

#include "ybc/spin_model.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "ybc/error.hpp"

namespace ybc {

std::string_view to_string(HamiltonianClass c) {
  switch (c) {
    case HamiltonianClass::X: return "X";
    case HamiltonianClass::Y: return "Y";
    case HamiltonianClass::Z: return "Z";
    case HamiltonianClass::XY: return "XY";
    case HamiltonianClass::XZ: return "XZ";
    case HamiltonianClass::YZ: return "YZ";
    case HamiltonianClass::XYZ: return "XYZ";
  }
  return "XYZ";
}

HamiltonianClass parse_hamiltonian_class(std::string_view text) {
  std::string upper;
  for (char ch : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  for (auto c : {HamiltonianClass::X, HamiltonianClass::Y, HamiltonianClass::Z,
                 HamiltonianClass::XY, HamiltonianClass::XZ, HamiltonianClass::YZ,
                 HamiltonianClass::XYZ}) {
    if (upper == to_string(c)) return c;
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown Hamiltonian class '" + std::string(text) + "'");
}

bool has_x(HamiltonianClass c) {
  return c == HamiltonianClass::X || c == HamiltonianClass::XY ||
         c == HamiltonianClass::XZ || c == HamiltonianClass::XYZ;
}

bool has_y(HamiltonianClass c) {
  return c == HamiltonianClass::Y || c == HamiltonianClass::XY ||
         c == HamiltonianClass::YZ || c == HamiltonianClass::XYZ;
}

bool has_z(HamiltonianClass c) {
  return c == HamiltonianClass::Z || c == HamiltonianClass::XZ ||
         c == HamiltonianClass::YZ || c == HamiltonianClass::XYZ;
}

HamiltonianClass class_from_axes(bool x, bool y, bool z) {
  if (x && y && z) return HamiltonianClass::XYZ;
  if (x && y) return HamiltonianClass::XY;
  if (x && z) return HamiltonianClass::XZ;
  if (y && z) return HamiltonianClass::YZ;
  if (y) return HamiltonianClass::Y;
  if (z) return HamiltonianClass::Z;
  return HamiltonianClass::X;
}

TrotterPlan TrotterPlan::make(double t_final, double dt) {
  if (!std::isfinite(t_final) || t_final <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "t_final must be a positive finite number");
  }
  if (!std::isfinite(dt) || dt <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "dt must be a positive finite number");
  }
  if (dt > t_final) {
    throw Error(ErrorCode::InvalidArgument, "dt must not exceed t_final");
  }
  const double steps = std::round(t_final / dt);
  if (steps > 1e7) {
    throw Error(ErrorCode::SizeGuard, "t_final / dt exceeds 1e7 steps");
  }
  return TrotterPlan{t_final, dt, static_cast<int>(steps)};
}

void validate(const CouplingParams& j) {
  if (!std::isfinite(j.jx)) throw Error(ErrorCode::InvalidArgument, "J.x must be finite");
  if (!std::isfinite(j.jy)) throw Error(ErrorCode::InvalidArgument, "J.y must be finite");
  if (!std::isfinite(j.jz)) throw Error(ErrorCode::InvalidArgument, "J.z must be finite");
}

HamiltonianClass classify(const CouplingParams& j, double zero_tol) {
  if (zero_tol < 0.0) throw Error(ErrorCode::InvalidArgument, "zero_tol must be >= 0");
  return class_from_axes(std::abs(j.jx) > zero_tol, std::abs(j.jy) > zero_tol,
                         std::abs(j.jz) > zero_tol);
}

Angles3 step_angles(const CouplingParams& j, double dt) {
  return {j.jx * dt, j.jy * dt, j.jz * dt};
}

}  // namespace ybc
