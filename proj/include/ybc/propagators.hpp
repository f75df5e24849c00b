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

// Two-spin time-evolution matrices and their native-gate circuits.
//
// Conventions: basis |00>, |01>, |10>, |11> with qubit 0 as the left tensor
// factor; RX(t) = exp(-i t X / 2), RZ(t) = exp(-i t Z / 2), S = diag(1, i),
// H the Hadamard, CX controlled on qubit 0.

#include <string_view>
#include <vector>

#include "ybc/angles.hpp"
#include "ybc/linalg.hpp"
#include "ybc/spin_model.hpp"

namespace ybc {

enum class PauliAxis { X, Y, Z };

/// exp(i theta s^a (x) s^a).
Unitary4 pauli_pair_exponential(PauliAxis axis, double theta);

/// exp(i (theta_x XX + theta_y YY + theta_z ZZ)), closed form.
Unitary4 xyz_propagator(const Angles3& a);

/// R(gamma, delta) = exp(i (gamma XX + delta ZZ)).
Unitary4 r_matrix(const RGateParams& p);

/// Angles3 equivalent of a conjugated R gate: U1 R U1^dag = exp(i(g YY + d ZZ)),
/// U2 R U2^dag = exp(i(g XX + d YY)).
Angles3 to_angles3(const RGateParams& p, Conjugation conj);

/// The conjugated R gate as a matrix (== xyz_propagator(to_angles3(p, conj))).
Unitary4 conjugated_r_matrix(const RGateParams& p, Conjugation conj);

struct RMapping {
  RGateParams params;
  Conjugation conj = Conjugation::None;
  bool ok = false;
};

/// Maps an angle triple onto the R(gamma, delta) family: theta_y = 0 gives
/// (theta_x, theta_z) unconjugated; theta_z = 0 gives (theta_x, theta_y) with
/// U2; theta_x = 0 gives (theta_y, theta_z) with U1. Checked in that order.
/// ok is false for a full XYZ triple.
RMapping from_angles3(const Angles3& a, double zero_tol = kDefaultZeroTol);

/// Class-consistent mapping used when a whole circuit shares one class
/// (X, Z, XZ unconjugated; Y, YZ with U1; XY with U2). Throws
/// UnsupportedClass for XYZ and InvalidArgument when `a` has a component
/// outside the class.
RMapping map_to_class(const Angles3& a, HamiltonianClass cls,
                      double zero_tol = kDefaultZeroTol);

/// Conjugation used by map_to_class for each class.
Conjugation conjugation_for(HamiltonianClass cls);

struct NativeGate {
  enum class Kind { RX, RZ, H, S, CX };
  Kind kind;
  double angle = 0.0;  // rotations only
  int qubit = 0;       // target (control for CX)
  int target = -1;     // CX target

  static NativeGate rx(int q, double angle) { return {Kind::RX, angle, q, -1}; }
  static NativeGate rz(int q, double angle) { return {Kind::RZ, angle, q, -1}; }
  static NativeGate h(int q) { return {Kind::H, 0.0, q, -1}; }
  static NativeGate s(int q) { return {Kind::S, 0.0, q, -1}; }
  static NativeGate cx(int control, int target) { return {Kind::CX, 0.0, control, target}; }

  bool is_two_qubit() const { return kind == Kind::CX; }
};

std::string_view to_string(NativeGate::Kind k);

/// Native gates on a two-qubit register (local indices 0 and 1).
using GateSequence = std::vector<NativeGate>;

Eigen::Matrix2cd single_qubit_matrix(NativeGate::Kind kind, double angle);

/// Product of the sequence, first gate applied first.
Unitary4 evaluate(const GateSequence& seq);

/// Three-CX circuit for the XYZ propagator, equal to xyz_propagator(a) up to
/// a global phase:
///   CX; RX(-2tx) (x) RZ(-2tz); H(0); CX; S (x) RZ(2ty); H(0); CX;
///   RX(-pi/2) (x) RX(pi/2)
GateSequence decompose_xyz(const Angles3& a);

/// Two-CX circuit for one of the six single/double-axis classes, with the
/// U1/U2 frame change around it where the class needs one. Rejects XYZ.
GateSequence special_case_sequence(HamiltonianClass cls, const RGateParams& p);

std::size_t count_two_qubit(const GateSequence& seq);

}  // namespace ybc
