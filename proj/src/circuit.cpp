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

#include "ybc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ybc/error.hpp"
#include "ybc/propagators.hpp"

namespace ybc {

Angles3 PairGate::angles() const {
  if (const auto* a = std::get_if<Angles3>(&params)) return *a;
  return to_angles3(std::get<RGateParams>(params), conj);
}

Unitary4 pair_unitary(const PairGate& g) {
  if (const auto* p = std::get_if<RGateParams>(&g.params)) {
    return conjugated_r_matrix(*p, g.conj);
  }
  return xyz_propagator(std::get<Angles3>(g.params));
}

PairGate inverse(const PairGate& g) {
  PairGate out = g;
  if (auto* p = std::get_if<RGateParams>(&out.params)) {
    *p = {-p->gamma, -p->delta};
  } else {
    auto& a = std::get<Angles3>(out.params);
    a = {-a.theta_x, -a.theta_y, -a.theta_z};
  }
  return out;
}

Circuit Circuit::from_gates(int num_qubits, const std::vector<PairGate>& gates) {
  Circuit c;
  c.num_qubits = num_qubits;
  c.columns.reserve(gates.size());
  for (const auto& g : gates) c.columns.push_back({g});
  return c;
}

std::size_t Circuit::gate_count() const {
  std::size_t n = 0;
  for (const auto& col : columns) n += col.size();
  return n;
}

std::vector<PairGate> Circuit::gates() const {
  std::vector<PairGate> out;
  out.reserve(gate_count());
  for (const auto& col : columns) out.insert(out.end(), col.begin(), col.end());
  return out;
}

int column_parity(const Column& col) {
  if (col.empty()) return -1;
  const int parity = col.front().pair & 1;
  for (const auto& g : col) {
    if ((g.pair & 1) != parity) return -1;
  }
  return parity;
}

bool Circuit::is_alternating() const {
  int prev = -1;
  for (const auto& col : columns) {
    const int parity = column_parity(col);
    // A two-qubit chain has no odd pairs, so its columns are all even.
    if (parity < 0 || (parity == prev && num_qubits > 2)) return false;
    prev = parity;
  }
  return true;
}

void Circuit::validate() const {
  if (num_qubits < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "num_qubits must be at least 2, got " + std::to_string(num_qubits));
  }
  std::vector<int> seen(num_qubits, -1);
  for (std::size_t ci = 0; ci < columns.size(); ++ci) {
    for (const auto& g : columns[ci]) {
      if (g.pair < 0 || g.pair > num_qubits - 2) {
        throw Error(ErrorCode::InvalidArgument,
                    "pair index " + std::to_string(g.pair) + " outside a " +
                        std::to_string(num_qubits) + "-qubit chain");
      }
      const int stamp = static_cast<int>(ci);
      if (seen[g.pair] == stamp || seen[g.pair + 1] == stamp) {
        throw Error(ErrorCode::InvalidArgument,
                    "column " + std::to_string(ci) + " has overlapping gates at pair " +
                        std::to_string(g.pair));
      }
      seen[g.pair] = seen[g.pair + 1] = stamp;
      const bool finite = g.is_r() ? is_finite(std::get<RGateParams>(g.params))
                                   : is_finite(std::get<Angles3>(g.params));
      if (!finite) {
        throw Error(ErrorCode::InvalidArgument,
                    "non-finite gate parameters at pair " + std::to_string(g.pair));
      }
    }
  }
}

std::vector<Column> trotter_step_columns(int num_qubits, const Angles3& step) {
  std::vector<Column> cols;
  for (int parity = 0; parity < 2; ++parity) {
    Column col;
    for (int i = parity; i + 1 < num_qubits; i += 2) col.push_back(PairGate::xyz(i, step));
    if (!col.empty()) cols.push_back(std::move(col));
  }
  return cols;
}

Circuit build_trotter_circuit(int num_qubits, const CouplingParams& j, const TrotterPlan& plan) {
  if (num_qubits < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "spins must be at least 2, got " + std::to_string(num_qubits));
  }
  validate(j);
  const auto step = trotter_step_columns(num_qubits, step_angles(j, plan.dt));
  Circuit c;
  c.num_qubits = num_qubits;
  c.columns.reserve(step.size() * static_cast<std::size_t>(plan.num_steps));
  for (int s = 0; s < plan.num_steps; ++s) {
    c.columns.insert(c.columns.end(), step.begin(), step.end());
  }
  return c;
}

Circuit columnize(const Circuit& c) {
  c.validate();
  Circuit out;
  out.num_qubits = c.num_qubits;
  // Index of the last column that touches each qubit.
  std::vector<int> last(std::max(c.num_qubits, 0), -1);
  for (const auto& g : c.gates()) {
    const int col = std::max(last[g.pair], last[g.pair + 1]) + 1;
    if (col == static_cast<int>(out.columns.size())) out.columns.emplace_back();
    out.columns[col].push_back(g);
    last[g.pair] = last[g.pair + 1] = col;
  }
  for (auto& col : out.columns) {
    std::sort(col.begin(), col.end(),
              [](const PairGate& a, const PairGate& b) { return a.pair < b.pair; });
  }
  return out;
}

Circuit inverse(const Circuit& c) {
  Circuit out;
  out.num_qubits = c.num_qubits;
  out.columns.reserve(c.columns.size());
  for (auto it = c.columns.rbegin(); it != c.columns.rend(); ++it) {
    Column col;
    col.reserve(it->size());
    for (const auto& g : *it) col.push_back(inverse(g));
    out.columns.push_back(std::move(col));
  }
  return out;
}

HamiltonianClass circuit_class(const Circuit& c, double zero_tol) {
  bool x = false, y = false, z = false;
  for (const auto& col : c.columns) {
    for (const auto& g : col) {
      const Angles3 a = g.angles();
      x = x || std::abs(a.theta_x) > zero_tol;
      y = y || std::abs(a.theta_y) > zero_tol;
      z = z || std::abs(a.theta_z) > zero_tol;
    }
  }
  return class_from_axes(x, y, z);
}

void apply_in_place(std::span<Complex> amps, const Circuit& c) {
  for (const auto& col : c.columns) {
    for (const auto& g : col) {
      kernels::apply_pair(amps, c.num_qubits, g.pair, to_kernel(pair_unitary(g)));
    }
  }
}

Unitary unitary_of(const Circuit& c) {
  if (c.num_qubits > kMaxDenseQubits) {
    throw Error(ErrorCode::SizeGuard,
                "unitary_of supports at most " + std::to_string(kMaxDenseQubits) +
                    " qubits, got " + std::to_string(c.num_qubits));
  }
  c.validate();
  const Eigen::Index dim = Eigen::Index{1} << c.num_qubits;
  Unitary u = Unitary::Identity(dim, dim);
  // Column-major storage: each basis column is contiguous, so the gate list
  // is applied to every column with the statevector kernels.
  std::vector<std::pair<int, kernels::Mat4>> ops;
  ops.reserve(c.gate_count());
  for (const auto& col : c.columns) {
    for (const auto& g : col) ops.emplace_back(g.pair, to_kernel(pair_unitary(g)));
  }
  for (Eigen::Index k = 0; k < dim; ++k) {
    std::span<Complex> column(u.col(k).data(), static_cast<std::size_t>(dim));
    for (const auto& [pair, m] : ops) kernels::apply_pair(column, c.num_qubits, pair, m);
  }
  return u;
}

double operator_distance(const Circuit& a, const Circuit& b) {
  if (a.num_qubits != b.num_qubits) {
    throw Error(ErrorCode::DimensionMismatch,
                "circuits act on " + std::to_string(a.num_qubits) + " and " +
                    std::to_string(b.num_qubits) + " qubits");
  }
  if (a.num_qubits > kMaxDenseQubits) {
    throw Error(ErrorCode::SizeGuard, "operator_distance supports at most " +
                                          std::to_string(kMaxDenseQubits) + " qubits");
  }
  a.validate();
  b.validate();
  const std::size_t dim = std::size_t{1} << a.num_qubits;
  return phase_aligned_distance(
      dim, [&](std::span<Complex> x) { apply_in_place(x, a); },
      [&](std::span<Complex> x) { apply_in_place(x, b); });
}

}  // namespace ybc
