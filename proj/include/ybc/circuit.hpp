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

// Circuit intermediate representation: two-qubit gates on adjacent pairs of
// an open N-qubit chain, grouped into columns of non-overlapping gates.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "ybc/angles.hpp"
#include "ybc/linalg.hpp"
#include "ybc/spin_model.hpp"

namespace ybc {

/// Largest register for which dense operators are materialized.
inline constexpr int kMaxDenseQubits = 12;

/// A two-qubit gate on qubits (pair, pair + 1). Either a general XYZ
/// propagator or an R(gamma, delta) gate, optionally conjugated.
struct PairGate {
  int pair = 0;
  std::variant<Angles3, RGateParams> params;
  Conjugation conj = Conjugation::None;  // meaningful for RGateParams only

  static PairGate xyz(int pair, const Angles3& a) { return {pair, a, Conjugation::None}; }
  static PairGate r(int pair, const RGateParams& p, Conjugation conj = Conjugation::None) {
    return {pair, p, conj};
  }

  bool is_r() const { return std::holds_alternative<RGateParams>(params); }
  /// The equivalent XYZ angles.
  Angles3 angles() const;

  friend bool operator==(const PairGate&, const PairGate&) = default;
};

Unitary4 pair_unitary(const PairGate& g);

/// The inverse gate (all angles negated).
PairGate inverse(const PairGate& g);

using Column = std::vector<PairGate>;

struct Circuit {
  int num_qubits = 2;
  /// Columns in time order. Gates inside a column act on disjoint qubits.
  std::vector<Column> columns;

  /// One column per gate, in the given order.
  static Circuit from_gates(int num_qubits, const std::vector<PairGate>& gates);

  std::size_t gate_count() const;
  /// All gates in time order (column by column).
  std::vector<PairGate> gates() const;

  /// True when every column holds only even or only odd pairs and
  /// consecutive columns alternate parity (for N = 2 every column is pair 0).
  bool is_alternating() const;

  /// Throws InvalidArgument on N < 2, out-of-range pairs, overlapping gates
  /// in a column or non-finite parameters.
  void validate() const;
};

/// Parity of a column's pairs: 0 even, 1 odd, -1 mixed or empty.
int column_parity(const Column& col);

/// First-order Trotter circuit: per step an even-pair column then an
/// odd-pair column, each gate exp(i dt (Jx XX + Jy YY + Jz ZZ)).
Circuit build_trotter_circuit(int num_qubits, const CouplingParams& j, const TrotterPlan& plan);

/// One Trotter step (the even and, for N > 2, odd column).
std::vector<Column> trotter_step_columns(int num_qubits, const Angles3& step);

/// Greedy left-packing: each gate moves to the earliest column after the
/// last column touching one of its qubits. Idempotent.
Circuit columnize(const Circuit& c);

/// The adjoint circuit: reversed order, negated angles.
Circuit inverse(const Circuit& c);

/// Union of active axes over all gates.
HamiltonianClass circuit_class(const Circuit& c, double zero_tol = kDefaultZeroTol);

/// Applies the circuit to a 2^N amplitude array in place.
void apply_in_place(std::span<Complex> amps, const Circuit& c);

/// Dense 2^N x 2^N unitary. Throws SizeGuard above kMaxDenseQubits.
Unitary unitary_of(const Circuit& c);

/// Phase-aligned Frobenius distance between the operators of two circuits,
/// accumulated column by column without materializing either matrix.
/// Throws DimensionMismatch on differing qubit counts and SizeGuard above
/// kMaxDenseQubits.
double operator_distance(const Circuit& a, const Circuit& b);

}  // namespace ybc
