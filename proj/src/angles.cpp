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

#include "ybc/angles.hpp"

#include <cmath>
#include <numbers>

#include "ybc/error.hpp"

namespace ybc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::SizeGuard: return "SIZE_GUARD";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::UnsupportedClass: return "UNSUPPORTED_CLASS";
    case ErrorCode::Unsolved: return "UNSOLVED";
    case ErrorCode::ResidualBudget: return "RESIDUAL_BUDGET";
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::Numerical: return "NUMERICAL";
  }
  return "UNKNOWN";
}

std::string_view to_string(Conjugation c) {
  switch (c) {
    case Conjugation::None: return "none";
    case Conjugation::U1: return "U1";
    case Conjugation::U2: return "U2";
  }
  return "none";
}

double canonicalize_angle(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double r = std::remainder(angle, kTwoPi);  // [-pi, pi]
  if (r <= -std::numbers::pi) r += kTwoPi;
  return r;
}

Angles3 canonicalize(const Angles3& a) {
  return {canonicalize_angle(a.theta_x), canonicalize_angle(a.theta_y),
          canonicalize_angle(a.theta_z)};
}

RGateParams canonicalize(const RGateParams& p) {
  return {canonicalize_angle(p.gamma), canonicalize_angle(p.delta)};
}

bool is_finite(const Angles3& a) {
  return std::isfinite(a.theta_x) && std::isfinite(a.theta_y) &&
         std::isfinite(a.theta_z);
}

bool is_finite(const RGateParams& p) {
  return std::isfinite(p.gamma) && std::isfinite(p.delta);
}

}  // namespace ybc
