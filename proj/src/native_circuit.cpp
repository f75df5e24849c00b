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

#include "ybc/native_circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "ybc/error.hpp"

namespace ybc {

std::size_t NativeCircuit::gate_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.gates.size();
  return n;
}

std::size_t NativeCircuit::two_qubit_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += count_two_qubit(b.gates);
  return n;
}

std::vector<NativeGate> NativeCircuit::flatten() const {
  std::vector<NativeGate> out;
  out.reserve(gate_count());
  for (const auto& b : blocks) {
    for (NativeGate g : b.gates) {
      g.qubit += b.pair;
      if (g.is_two_qubit()) g.target += b.pair;
      out.push_back(g);
    }
  }
  return out;
}

NativeCircuit lower(const Circuit& c, double zero_tol) {
  c.validate();
  const HamiltonianClass cls = circuit_class(c, zero_tol);
  NativeCircuit out;
  out.num_qubits = c.num_qubits;
  out.blocks.reserve(c.gate_count());
  for (const auto& col : c.columns) {
    for (const auto& g : col) {
      const Angles3 a = g.angles();
      if (cls == HamiltonianClass::XYZ) {
        out.blocks.push_back({g.pair, decompose_xyz(a)});
        continue;
      }
      RGateParams p = map_to_class(a, cls, zero_tol).params;
      // Sub-tolerance leftovers on an axis the class lacks are dropped.
      if (cls == HamiltonianClass::Z) p.gamma = 0.0;
      if (cls == HamiltonianClass::X || cls == HamiltonianClass::Y) p.delta = 0.0;
      out.blocks.push_back({g.pair, special_case_sequence(cls, p)});
    }
  }
  return out;
}

std::vector<KernelOp> compile(int num_qubits, const std::vector<NativeGate>& gates) {
  std::vector<KernelOp> ops;
  ops.reserve(gates.size());
  for (const auto& g : gates) {
    KernelOp op;
    if (g.is_two_qubit()) {
      if (g.qubit < 0 || g.target < 0 || g.qubit >= num_qubits || g.target >= num_qubits ||
          std::abs(g.qubit - g.target) != 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "cx needs adjacent qubits, got " + std::to_string(g.qubit) + "," +
                        std::to_string(g.target));
      }
      op.two_qubit = true;
      op.index = std::min(g.qubit, g.target);
      op.qubit_a = g.qubit;
      op.qubit_b = g.target;
      const Unitary4 cx = evaluate({g.qubit < g.target ? NativeGate::cx(0, 1)
                                                       : NativeGate::cx(1, 0)});
      op.m4 = to_kernel(cx);
    } else {
      if (g.qubit < 0 || g.qubit >= num_qubits) {
        throw Error(ErrorCode::InvalidArgument,
                    "qubit " + std::to_string(g.qubit) + " outside the register");
      }
      op.index = g.qubit;
      op.qubit_a = g.qubit;
      op.m2 = to_kernel(single_qubit_matrix(g.kind, g.angle));
    }
    ops.push_back(op);
  }
  return ops;
}

void apply_ops(std::span<Complex> amps, int num_qubits, const std::vector<KernelOp>& ops) {
  for (const auto& op : ops) {
    if (op.two_qubit) {
      kernels::apply_pair(amps, num_qubits, op.index, op.m4);
    } else {
      kernels::apply_single(amps, num_qubits, op.index, op.m2);
    }
  }
}

double operator_distance(int num_qubits, const std::vector<KernelOp>& a,
                         const std::vector<KernelOp>& b) {
  if (num_qubits < 1 || num_qubits > kMaxDenseQubits) {
    throw Error(ErrorCode::SizeGuard, "operator_distance supports 1 to " +
                                          std::to_string(kMaxDenseQubits) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  return phase_aligned_distance(
      dim, [&](std::span<Complex> x) { apply_ops(x, num_qubits, a); },
      [&](std::span<Complex> x) { apply_ops(x, num_qubits, b); });
}

Unitary unitary_of(const NativeCircuit& c) {
  if (c.num_qubits > kMaxDenseQubits) {
    throw Error(ErrorCode::SizeGuard,
                "unitary_of supports at most " + std::to_string(kMaxDenseQubits) +
                    " qubits, got " + std::to_string(c.num_qubits));
  }
  const auto ops = compile(c.num_qubits, c.flatten());
  const Eigen::Index dim = Eigen::Index{1} << c.num_qubits;
  Unitary u = Unitary::Identity(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    apply_ops(std::span<Complex>(u.col(k).data(), static_cast<std::size_t>(dim)), c.num_qubits,
              ops);
  }
  return u;
}

}  // namespace ybc
