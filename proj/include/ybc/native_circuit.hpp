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

// Circuits lowered to the native gate set {RX, RZ, H, S, CX}.

#include <cstddef>
#include <span>
#include <vector>

#include "ybc/circuit.hpp"
#include "ybc/propagators.hpp"

namespace ybc {

/// The native gates implementing one PairGate, in local indices (0 -> pair,
/// 1 -> pair + 1).
struct NativeBlock {
  int pair = 0;
  GateSequence gates;
};

struct NativeCircuit {
  int num_qubits = 2;
  std::vector<NativeBlock> blocks;

  std::size_t gate_count() const;
  std::size_t two_qubit_count() const;
  /// Gates in time order with absolute qubit indices.
  std::vector<NativeGate> flatten() const;
};

/// Lowers every gate with the template of the circuit-wide class: XYZ uses
/// the three-CX circuit, the other classes the two-CX special cases.
NativeCircuit lower(const Circuit& c, double zero_tol = kDefaultZeroTol);

/// A native gate prepared for the statevector kernels.
struct KernelOp {
  bool two_qubit = false;
  int index = 0;  // pair for two-qubit ops, qubit otherwise
  int qubit_a = 0;
  int qubit_b = -1;  // second touched qubit (two-qubit ops)
  kernels::Mat4 m4{};
  kernels::Mat2 m2{};
};

/// Compiles absolute-index native gates. CX must act on adjacent qubits.
std::vector<KernelOp> compile(int num_qubits, const std::vector<NativeGate>& gates);

void apply_ops(std::span<Complex> amps, int num_qubits, const std::vector<KernelOp>& ops);

/// Phase-aligned Frobenius distance between two compiled gate lists on the
/// same register, without materializing the operators.
double operator_distance(int num_qubits, const std::vector<KernelOp>& a,
                         const std::vector<KernelOp>& b);

/// Dense unitary of a native circuit. Throws SizeGuard above kMaxDenseQubits.
Unitary unitary_of(const NativeCircuit& c);

}  // namespace ybc
