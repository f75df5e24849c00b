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

// Dense verification oracle and dynamics engine for the Heisenberg chain.
//
// Spin up is |0>, qubit q is bit (N - 1 - q) of a basis index, and the
// staggered magnetization is m_s = (1/N) sum_i (-1)^i <Z_i>, so the Neel
// state |0101...> has m_s = 1.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ybc/circuit.hpp"
#include "ybc/native_circuit.hpp"
#include "ybc/spin_model.hpp"

namespace ybc {

using StateVector = Eigen::VectorXcd;
using DenseHamiltonian = Eigen::MatrixXcd;

/// H = -sum_a J_a sum_i s^a_i s^a_{i+1}. Throws SizeGuard outside [2, 12].
DenseHamiltonian build_hamiltonian(int num_qubits, const CouplingParams& j);

/// exp(-i H t) by Hermitian eigendecomposition.
Unitary exact_propagator(const DenseHamiltonian& h, double t);

StateVector neel_state(int num_qubits);
/// Basis state from a bitstring, character q giving qubit q ("010").
StateVector basis_state(std::string_view bits);

/// Throws DimensionMismatch when the state does not hold 2^N amplitudes.
StateVector apply_circuit(const StateVector& s, const Circuit& c);

double staggered_magnetization(const StateVector& s);

struct ObservableRow {
  int step = 0;
  double time = 0.0;
  double m_s = 0.0;
};
using ObservableSeries = std::vector<ObservableRow>;

enum class DynamicsMode { Exact, Trotter, Compressed };

std::string_view to_string(DynamicsMode m);
DynamicsMode parse_dynamics_mode(std::string_view text);

struct DynamicsResult {
  ObservableSeries series;
  /// Two-qubit pair gates in the circuit that produced each row (0 for exact
  /// evolution).
  std::vector<std::size_t> pair_gates;
  /// Accumulated rewrite residual (compressed mode).
  double residual = 0.0;
};

/// Rows for steps 0..num_steps. Exact mode evaluates exp(-i H t) at every
/// step time (N <= 12); trotter applies one step's columns per step;
/// compressed absorbs one step per row into a block padded to the full
/// N(N-1)/2-gate square and applies it to the initial state.
DynamicsResult run_dynamics(int num_qubits, const CouplingParams& j, const TrotterPlan& plan,
                            DynamicsMode mode, const StateVector& initial);

struct NoiseModel {
  double p1 = 0.0;  // after each single-qubit gate
  double p2 = 0.0;  // after each CX
  int shots = 1;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument naming the offending field.
  void validate() const;
};

struct NoisyEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

using Observable = std::function<double(const StateVector&)>;

/// Pauli-trajectory Monte Carlo: after each gate a uniformly chosen
/// non-identity Pauli on the touched qubit(s) is inserted with probability
/// p1 or p2. Shot k draws from mt19937_64(seed + k).
NoisyEstimate run_noisy(const NativeCircuit& c, const NoiseModel& noise,
                        const StateVector& initial,
                        const Observable& observable = staggered_magnetization);

struct NoisyRow {
  int step = 0;
  double time = 0.0;
  double m_s = 0.0;
  double std_error = 0.0;
};
using NoisySeries = std::vector<NoisyRow>;

/// Noisy m_s per step. Trotter mode follows each shot through all steps;
/// compressed mode runs the lowered compressed circuit of every step.
NoisySeries run_noisy_dynamics(int num_qubits, const CouplingParams& j, const TrotterPlan& plan,
                               DynamicsMode mode, const NoiseModel& noise,
                               const StateVector& initial);

void write_csv(std::ostream& out, const ObservableSeries& series);
void write_csv(std::ostream& out, const NoisySeries& series);

}  // namespace ybc
