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

#include "ybc/propagators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "ybc/error.hpp"

namespace ybc {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

Unitary4 pauli_pair_exponential(PauliAxis axis, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Unitary4 u = Unitary4::Zero();
  switch (axis) {
    case PauliAxis::X:
      u.diagonal().setConstant(c);
      u(0, 3) = u(1, 2) = u(2, 1) = u(3, 0) = kI * s;
      break;
    case PauliAxis::Y:
      u.diagonal().setConstant(c);
      u(0, 3) = u(3, 0) = -kI * s;
      u(1, 2) = u(2, 1) = kI * s;
      break;
    case PauliAxis::Z: {
      const Complex plus = std::polar(1.0, theta);
      const Complex minus = std::conj(plus);
      u(0, 0) = plus;
      u(1, 1) = minus;
      u(2, 2) = minus;
      u(3, 3) = plus;
      break;
    }
  }
  return u;
}

Unitary4 xyz_propagator(const Angles3& a) {
  // XX, YY and ZZ share the Bell eigenbasis, so the product splits into the
  // {|00>,|11>} block (rotation theta_x - theta_y, phase +theta_z) and the
  // {|01>,|10>} block (rotation theta_x + theta_y, phase -theta_z).
  const double outer = a.theta_x - a.theta_y;
  const double inner = a.theta_x + a.theta_y;
  const Complex phase_out = std::polar(1.0, a.theta_z);
  const Complex phase_in = std::conj(phase_out);
  Unitary4 u = Unitary4::Zero();
  u(0, 0) = u(3, 3) = phase_out * std::cos(outer);
  u(0, 3) = u(3, 0) = kI * phase_out * std::sin(outer);
  u(1, 1) = u(2, 2) = phase_in * std::cos(inner);
  u(1, 2) = u(2, 1) = kI * phase_in * std::sin(inner);
  return u;
}

Unitary4 r_matrix(const RGateParams& p) {
  return xyz_propagator(Angles3{p.gamma, 0.0, p.delta});
}

Angles3 to_angles3(const RGateParams& p, Conjugation conj) {
  switch (conj) {
    case Conjugation::None: return {p.gamma, 0.0, p.delta};
    case Conjugation::U1: return {0.0, p.gamma, p.delta};
    case Conjugation::U2: return {p.gamma, p.delta, 0.0};
  }
  return {p.gamma, 0.0, p.delta};
}

Unitary4 conjugated_r_matrix(const RGateParams& p, Conjugation conj) {
  return xyz_propagator(to_angles3(p, conj));
}

RMapping from_angles3(const Angles3& a, double zero_tol) {
  if (std::abs(a.theta_y) <= zero_tol) {
    return {{a.theta_x, a.theta_z}, Conjugation::None, true};
  }
  if (std::abs(a.theta_z) <= zero_tol) {
    return {{a.theta_x, a.theta_y}, Conjugation::U2, true};
  }
  if (std::abs(a.theta_x) <= zero_tol) {
    return {{a.theta_y, a.theta_z}, Conjugation::U1, true};
  }
  return {{}, Conjugation::None, false};
}

Conjugation conjugation_for(HamiltonianClass cls) {
  switch (cls) {
    case HamiltonianClass::X:
    case HamiltonianClass::Z:
    case HamiltonianClass::XZ:
      return Conjugation::None;
    case HamiltonianClass::Y:
    case HamiltonianClass::YZ:
      return Conjugation::U1;
    case HamiltonianClass::XY:
      return Conjugation::U2;
    case HamiltonianClass::XYZ:
      break;
  }
  throw Error(ErrorCode::UnsupportedClass,
              "the XYZ class has no R(gamma, delta) representation");
}

RMapping map_to_class(const Angles3& a, HamiltonianClass cls, double zero_tol) {
  const Conjugation conj = conjugation_for(cls);
  const bool fits = (has_x(cls) || std::abs(a.theta_x) <= zero_tol) &&
                    (has_y(cls) || std::abs(a.theta_y) <= zero_tol) &&
                    (has_z(cls) || std::abs(a.theta_z) <= zero_tol);
  if (!fits) {
    throw Error(ErrorCode::InvalidArgument,
                "angles have a component outside class " + std::string(to_string(cls)));
  }
  switch (conj) {
    case Conjugation::None: return {{a.theta_x, a.theta_z}, conj, true};
    case Conjugation::U1: return {{a.theta_y, a.theta_z}, conj, true};
    case Conjugation::U2: return {{a.theta_x, a.theta_y}, conj, true};
  }
  return {};
}

std::string_view to_string(NativeGate::Kind k) {
  switch (k) {
    case NativeGate::Kind::RX: return "rx";
    case NativeGate::Kind::RZ: return "rz";
    case NativeGate::Kind::H: return "h";
    case NativeGate::Kind::S: return "s";
    case NativeGate::Kind::CX: return "cx";
  }
  return "?";
}

Eigen::Matrix2cd single_qubit_matrix(NativeGate::Kind kind, double angle) {
  Eigen::Matrix2cd m;
  switch (kind) {
    case NativeGate::Kind::RX: {
      const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
      m << c, -kI * s, -kI * s, c;
      return m;
    }
    case NativeGate::Kind::RZ:
      m << std::polar(1.0, -angle / 2.0), 0.0, 0.0, std::polar(1.0, angle / 2.0);
      return m;
    case NativeGate::Kind::H: {
      const double r = 1.0 / std::numbers::sqrt2;
      m << r, r, r, -r;
      return m;
    }
    case NativeGate::Kind::S:
      m << 1.0, 0.0, 0.0, kI;
      return m;
    case NativeGate::Kind::CX:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "CX is not a single-qubit gate");
}

namespace {

Unitary4 native_matrix(const NativeGate& g) {
  if (g.kind == NativeGate::Kind::CX) {
    Unitary4 cx = Unitary4::Zero();
    if (g.qubit == 0 && g.target == 1) {
      cx(0, 0) = cx(1, 1) = cx(2, 3) = cx(3, 2) = 1.0;
    } else if (g.qubit == 1 && g.target == 0) {
      cx(0, 0) = cx(2, 2) = cx(1, 3) = cx(3, 1) = 1.0;
    } else {
      throw Error(ErrorCode::InvalidArgument, "CX on a two-qubit register needs qubits {0,1}");
    }
    return cx;
  }
  const Eigen::Matrix2cd m = single_qubit_matrix(g.kind, g.angle);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Unitary4 out;
  if (g.qubit == 0) {
    out = Eigen::kroneckerProduct(m, id);
  } else if (g.qubit == 1) {
    out = Eigen::kroneckerProduct(id, m);
  } else {
    throw Error(ErrorCode::InvalidArgument, "qubit index outside a two-qubit register");
  }
  return out;
}

}  // namespace

Unitary4 evaluate(const GateSequence& seq) {
  Unitary4 u = Unitary4::Identity();
  for (const auto& g : seq) u = native_matrix(g) * u;
  return u;
}

GateSequence decompose_xyz(const Angles3& a) {
  return {
      NativeGate::cx(0, 1),
      NativeGate::rx(0, -2.0 * a.theta_x),
      NativeGate::rz(1, -2.0 * a.theta_z),
      NativeGate::h(0),
      NativeGate::cx(0, 1),
      NativeGate::s(0),
      NativeGate::rz(1, 2.0 * a.theta_y),
      NativeGate::h(0),
      NativeGate::cx(0, 1),
      NativeGate::rx(0, -kHalfPi),
      NativeGate::rx(1, kHalfPi),
  };
}

GateSequence special_case_sequence(HamiltonianClass cls, const RGateParams& p) {
  if (cls == HamiltonianClass::XYZ) {
    throw Error(ErrorCode::UnsupportedClass,
                "XYZ propagators have no two-CX special-case circuit");
  }
  const bool rotation = cls != HamiltonianClass::Z;
  const bool phase = cls == HamiltonianClass::Z || cls == HamiltonianClass::XZ ||
                     cls == HamiltonianClass::YZ || cls == HamiltonianClass::XY;
  if (!rotation && std::abs(p.gamma) > kDefaultZeroTol) {
    throw Error(ErrorCode::InvalidArgument,
                "gamma must be zero for class " + std::string(to_string(cls)));
  }
  if (!phase && std::abs(p.delta) > kDefaultZeroTol) {
    throw Error(ErrorCode::InvalidArgument,
                "delta must be zero for class " + std::string(to_string(cls)));
  }

  const Conjugation conj = conjugation_for(cls);
  GateSequence seq;
  auto frame = [&](double angle) {
    if (conj == Conjugation::U1) {
      seq.push_back(NativeGate::rz(0, angle));
      seq.push_back(NativeGate::rz(1, angle));
    } else if (conj == Conjugation::U2) {
      seq.push_back(NativeGate::rx(0, angle));
      seq.push_back(NativeGate::rx(1, angle));
    }
  };
  frame(kHalfPi);
  seq.push_back(NativeGate::cx(0, 1));
  if (rotation) seq.push_back(NativeGate::rx(0, -2.0 * p.gamma));
  if (phase) seq.push_back(NativeGate::rz(1, -2.0 * p.delta));
  seq.push_back(NativeGate::cx(0, 1));
  frame(-kHalfPi);
  return seq;
}

std::size_t count_two_qubit(const GateSequence& seq) {
  std::size_t n = 0;
  for (const auto& g : seq) n += g.is_two_qubit() ? 1 : 0;
  return n;
}

}  // namespace ybc
