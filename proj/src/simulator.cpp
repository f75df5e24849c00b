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

#include "ybc/simulator.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>

#include "ybc/compressor.hpp"
#include "ybc/error.hpp"

namespace ybc {

namespace {

constexpr double kNormTol = 1e-10;

void check_size(int num_qubits, int max_qubits) {
  if (num_qubits < 2 || num_qubits > max_qubits) {
    throw Error(ErrorCode::SizeGuard, "spins must be in [2, " + std::to_string(max_qubits) +
                                          "], got " + std::to_string(num_qubits));
  }
}

int qubits_of(Eigen::Index size) {
  if (size < 2 || !std::has_single_bit(static_cast<std::uint64_t>(size))) {
    throw Error(ErrorCode::DimensionMismatch,
                "state size " + std::to_string(size) + " is not a power of two");
  }
  return std::countr_zero(static_cast<std::uint64_t>(size));
}

void check_state(const StateVector& s, int num_qubits) {
  if (s.size() != (Eigen::Index{1} << num_qubits)) {
    throw Error(ErrorCode::DimensionMismatch,
                "state has " + std::to_string(s.size()) + " amplitudes, expected 2^" +
                    std::to_string(num_qubits));
  }
  if (std::abs(s.norm() - 1.0) > kNormTol) {
    throw Error(ErrorCode::InvalidArgument, "initial state is not normalized");
  }
}

// Calls f(row, value) for every nonzero element H(row, col) of column `col`.
template <typename F>
void hamiltonian_column(int n, const CouplingParams& j, std::uint64_t col, F&& f) {
  double diag = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const int lo = n - 2 - i;
    const std::uint64_t bits = (col >> lo) & 3u;
    const double sign = (bits == 0 || bits == 3) ? 1.0 : -1.0;
    diag -= j.jz * sign;
    // XX and YY both flip the pair; YY carries -(-1)^(b_i + b_j).
    const double off = -j.jx + j.jy * sign;
    if (off != 0.0) f(col ^ (std::uint64_t{3} << lo), off);
  }
  if (diag != 0.0) f(col, diag);
}

// Per-basis-state contribution to m_s.
std::vector<double> magnetization_weights(int n) {
  std::vector<double> w(std::size_t{1} << n);
  for (std::size_t b = 0; b < w.size(); ++b) {
    double m = 0.0;
    for (int q = 0; q < n; ++q) {
      const double z = ((b >> (n - 1 - q)) & 1u) ? -1.0 : 1.0;
      m += (q % 2 == 0) ? z : -z;
    }
    w[b] = m / n;
  }
  return w;
}

double magnetization(const Complex* amps, const std::vector<double>& w) {
  double m = 0.0;
  for (std::size_t b = 0; b < w.size(); ++b) m += std::norm(amps[b]) * w[b];
  return m;
}

// Compensated summation.
class Neumaier {
 public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Accumulator {
  Neumaier sum;
  Neumaier sum_sq;

  void add(double x) {
    sum.add(x);
    sum_sq.add(x * x);
  }

  NoisyEstimate finish(int shots) const {
    NoisyEstimate e;
    e.mean = sum.value() / shots;
    if (shots > 1) {
      const double var = (sum_sq.value() - shots * e.mean * e.mean) / (shots - 1);
      e.std_error = std::sqrt(std::max(var, 0.0) / shots);
    }
    return e;
  }
};

const std::array<kernels::Mat2, 4>& paulis() {
  static const std::array<kernels::Mat2, 4> p = [] {
    const Complex i{0.0, 1.0};
    return std::array<kernels::Mat2, 4>{
        kernels::Mat2{1.0, 0.0, 0.0, 1.0}, kernels::Mat2{0.0, 1.0, 1.0, 0.0},
        kernels::Mat2{0.0, -i, i, 0.0}, kernels::Mat2{1.0, 0.0, 0.0, -1.0}};
  }();
  return p;
}

// Applies the ops of one trajectory, inserting Pauli errors.
void apply_noisy(std::span<Complex> amps, int n, const std::vector<KernelOp>& ops,
                 const NoiseModel& noise, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (const auto& op : ops) {
    if (op.two_qubit) {
      kernels::apply_pair(amps, n, op.index, op.m4);
      if (noise.p2 > 0.0 && coin(rng) < noise.p2) {
        const int choice = std::uniform_int_distribution<int>(1, 15)(rng);
        if (choice / 4) kernels::apply_single(amps, n, op.qubit_a, paulis()[choice / 4]);
        if (choice % 4) kernels::apply_single(amps, n, op.qubit_b, paulis()[choice % 4]);
      }
    } else {
      kernels::apply_single(amps, n, op.index, op.m2);
      if (noise.p1 > 0.0 && coin(rng) < noise.p1) {
        const int choice = std::uniform_int_distribution<int>(1, 3)(rng);
        kernels::apply_single(amps, n, op.index, paulis()[choice]);
      }
    }
  }
}

Circuit step_circuit(int n, const CouplingParams& j, double dt) {
  Circuit c;
  c.num_qubits = n;
  c.columns = trotter_step_columns(n, step_angles(j, dt));
  return c;
}

std::vector<ObservableRow> exact_series(int n, const CouplingParams& j, const TrotterPlan& plan,
                                        const StateVector& initial) {
  // H is real symmetric and conserves the parity of the number of flipped
  // spins, so each parity sector is diagonalized on its own.
  const std::size_t dim = std::size_t{1} << n;
  const auto weights = magnetization_weights(n);
  std::vector<StateVector> states(plan.num_steps + 1, StateVector::Zero(dim));
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<std::uint64_t> basis;
    std::vector<Eigen::Index> index(dim, -1);
    for (std::uint64_t b = 0; b < dim; ++b) {
      if (std::popcount(b) % 2 == parity) {
        index[b] = static_cast<Eigen::Index>(basis.size());
        basis.push_back(b);
      }
    }
    const auto m = static_cast<Eigen::Index>(basis.size());
    Eigen::VectorXcd psi0(m);
    for (Eigen::Index k = 0; k < m; ++k) psi0[k] = initial[basis[k]];
    if (psi0.squaredNorm() == 0.0) continue;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
      hamiltonian_column(n, j, basis[k], [&](std::uint64_t row, double v) {
        h(index[row], k) += v;
      });
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    if (eig.info() != Eigen::Success) {
      throw Error(ErrorCode::Numerical, "Hamiltonian eigendecomposition failed");
    }
    const Eigen::VectorXcd coeff = eig.eigenvectors().transpose().cast<Complex>() * psi0;
    for (int s = 0; s <= plan.num_steps; ++s) {
      const double t = plan.time_at(s);
      Eigen::VectorXcd phased(m);
      for (Eigen::Index k = 0; k < m; ++k) {
        phased[k] = std::polar(1.0, -eig.eigenvalues()[k] * t) * coeff[k];
      }
      const Eigen::VectorXcd psi = eig.eigenvectors().cast<Complex>() * phased;
      for (Eigen::Index k = 0; k < m; ++k) states[s][basis[k]] = psi[k];
    }
  }
  states[0] = initial;  // exact at t = 0, free of eigenbasis round-off
  std::vector<ObservableRow> rows;
  for (int s = 0; s <= plan.num_steps; ++s) {
    rows.push_back({s, plan.time_at(s), magnetization(states[s].data(), weights)});
  }
  return rows;
}

}  // namespace

DenseHamiltonian build_hamiltonian(int num_qubits, const CouplingParams& j) {
  check_size(num_qubits, kMaxDenseQubits);
  validate(j);
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  DenseHamiltonian h = DenseHamiltonian::Zero(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    hamiltonian_column(num_qubits, j, col, [&](std::uint64_t row, double v) {
      h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += v;
    });
  }
  return h;
}

Unitary exact_propagator(const DenseHamiltonian& h, double t) {
  if (h.rows() != h.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "Hamiltonian is not square");
  }
  check_size(qubits_of(h.rows()), kMaxDenseQubits);
  if (!std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "time is not finite");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::Numerical, "Hamiltonian eigendecomposition failed");
  }
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    phases[k] = std::polar(1.0, -eig.eigenvalues()[k] * t);
  }
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

StateVector neel_state(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw Error(ErrorCode::SizeGuard, "spins must be in [1, 30], got " +
                                          std::to_string(num_qubits));
  }
  std::uint64_t index = 0;
  for (int q = 1; q < num_qubits; q += 2) index |= std::uint64_t{1} << (num_qubits - 1 - q);
  StateVector s = StateVector::Zero(Eigen::Index{1} << num_qubits);
  s[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector basis_state(std::string_view bits) {
  const int n = static_cast<int>(bits.size());
  if (n < 1 || n > 30) {
    throw Error(ErrorCode::InvalidArgument, "basis bitstring must have 1 to 30 characters");
  }
  std::uint64_t index = 0;
  for (int q = 0; q < n; ++q) {
    if (bits[q] != '0' && bits[q] != '1') {
      throw Error(ErrorCode::InvalidArgument,
                  "basis bitstring has a non-binary character at position " + std::to_string(q));
    }
    if (bits[q] == '1') index |= std::uint64_t{1} << (n - 1 - q);
  }
  StateVector s = StateVector::Zero(Eigen::Index{1} << n);
  s[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector apply_circuit(const StateVector& s, const Circuit& c) {
  c.validate();
  if (s.size() != (Eigen::Index{1} << c.num_qubits)) {
    throw Error(ErrorCode::DimensionMismatch,
                "state has " + std::to_string(s.size()) + " amplitudes, circuit acts on " +
                    std::to_string(c.num_qubits) + " qubits");
  }
  StateVector out = s;
  apply_in_place(std::span<Complex>(out.data(), static_cast<std::size_t>(out.size())), c);
  return out;
}

double staggered_magnetization(const StateVector& s) {
  const int n = qubits_of(s.size());
  double m = 0.0;
  for (Eigen::Index b = 0; b < s.size(); ++b) {
    const double p = std::norm(s[b]);
    if (p == 0.0) continue;
    double site = 0.0;
    for (int q = 0; q < n; ++q) {
      const double z = ((b >> (n - 1 - q)) & 1) ? -1.0 : 1.0;
      site += (q % 2 == 0) ? z : -z;
    }
    m += p * site;
  }
  return m / n;
}

std::string_view to_string(DynamicsMode m) {
  switch (m) {
    case DynamicsMode::Exact: return "exact";
    case DynamicsMode::Trotter: return "trotter";
    case DynamicsMode::Compressed: return "compressed";
  }
  return "?";
}

DynamicsMode parse_dynamics_mode(std::string_view text) {
  if (text == "exact") return DynamicsMode::Exact;
  if (text == "trotter") return DynamicsMode::Trotter;
  if (text == "compressed") return DynamicsMode::Compressed;
  throw Error(ErrorCode::InvalidArgument, "mode must be exact, trotter or compressed, got '" +
                                              std::string(text) + "'");
}

DynamicsResult run_dynamics(int num_qubits, const CouplingParams& j, const TrotterPlan& plan,
                            DynamicsMode mode, const StateVector& initial) {
  check_size(num_qubits, mode == DynamicsMode::Exact ? kMaxDenseQubits : 24);
  validate(j);
  check_state(initial, num_qubits);
  DynamicsResult result;
  if (mode == DynamicsMode::Exact) {
    result.series = exact_series(num_qubits, j, plan, initial);
    result.pair_gates.assign(result.series.size(), 0);
    return result;
  }

  const Circuit step = step_circuit(num_qubits, j, plan.dt);
  const auto weights = magnetization_weights(num_qubits);
  StateVector state = initial;
  auto record = [&](int s, const StateVector& psi, std::size_t gates) {
    result.series.push_back({s, plan.time_at(s), magnetization(psi.data(), weights)});
    result.pair_gates.push_back(gates);
  };

  if (mode == DynamicsMode::Trotter) {
    record(0, state, 0);
    const std::span<Complex> amps(state.data(), static_cast<std::size_t>(state.size()));
    for (int s = 1; s <= plan.num_steps; ++s) {
      apply_in_place(amps, step);
      record(s, state, step.gate_count() * static_cast<std::size_t>(s));
    }
    return result;
  }

  const HamiltonianClass cls = circuit_class(step);
  CompressedBlock block(num_qubits, cls);
  Circuit current = block.padded_to_square().to_circuit();
  record(0, apply_circuit(initial, current), current.gate_count());
  for (int s = 1; s <= plan.num_steps; ++s) {
    block = absorb_layer(block, step.columns);
    if (block.residual() > kResidualBudget) {
      throw Error(ErrorCode::ResidualBudget,
                  "accumulated rewrite residual " + std::to_string(block.residual()) +
                      " exceeds the budget at step " + std::to_string(s));
    }
    current = block.padded_to_square().to_circuit();
    record(s, apply_circuit(initial, current), current.gate_count());
  }
  result.residual = block.residual();
  return result;
}

void NoiseModel::validate() const {
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "noise.p1 must be in [0, 1], got " + std::to_string(p1));
  }
  if (!(p2 >= 0.0 && p2 <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "noise.p2 must be in [0, 1], got " + std::to_string(p2));
  }
  if (shots < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "noise.shots must be at least 1, got " + std::to_string(shots));
  }
}

NoisyEstimate run_noisy(const NativeCircuit& c, const NoiseModel& noise,
                        const StateVector& initial, const Observable& observable) {
  noise.validate();
  check_state(initial, c.num_qubits);
  const auto ops = compile(c.num_qubits, c.flatten());
  StateVector state(initial.size());
  const std::span<Complex> amps(state.data(), static_cast<std::size_t>(state.size()));
  if (noise.p1 == 0.0 && noise.p2 == 0.0) {
    // Every trajectory is the noiseless one.
    state = initial;
    apply_ops(amps, c.num_qubits, ops);
    return {observable(state), 0.0};
  }
  Accumulator acc;
  for (int shot = 0; shot < noise.shots; ++shot) {
    std::mt19937_64 rng(noise.seed + static_cast<std::uint64_t>(shot));
    state = initial;
    apply_noisy(amps, c.num_qubits, ops, noise, rng);
    acc.add(observable(state));
  }
  return acc.finish(noise.shots);
}

NoisySeries run_noisy_dynamics(int num_qubits, const CouplingParams& j, const TrotterPlan& plan,
                               DynamicsMode mode, const NoiseModel& noise,
                               const StateVector& initial) {
  check_size(num_qubits, 24);
  validate(j);
  noise.validate();
  check_state(initial, num_qubits);
  if (mode == DynamicsMode::Exact) {
    throw Error(ErrorCode::InvalidArgument, "noisy runs need the trotter or compressed mode");
  }
  const double m0 = staggered_magnetization(initial);
  NoisySeries series{{0, 0.0, m0, 0.0}};
  const Circuit step = step_circuit(num_qubits, j, plan.dt);

  if (mode == DynamicsMode::Compressed) {
    CompressedBlock block(num_qubits, circuit_class(step));
    for (int s = 1; s <= plan.num_steps; ++s) {
      block = absorb_layer(block, step.columns);
      const NativeCircuit native = lower(block.padded_to_square().to_circuit());
      const NoisyEstimate e = run_noisy(native, noise, initial);
      series.push_back({s, plan.time_at(s), e.mean, e.std_error});
    }
    return series;
  }

  // Trotter: one trajectory per shot through all steps.
  const auto ops = compile(num_qubits, lower(step).flatten());
  const auto weights = magnetization_weights(num_qubits);
  std::vector<Accumulator> acc(plan.num_steps + 1);
  const bool noiseless = noise.p1 == 0.0 && noise.p2 == 0.0;
  const int shots = noiseless ? 1 : noise.shots;
  StateVector state(initial.size());
  const std::span<Complex> amps(state.data(), static_cast<std::size_t>(state.size()));
  for (int shot = 0; shot < shots; ++shot) {
    std::mt19937_64 rng(noise.seed + static_cast<std::uint64_t>(shot));
    state = initial;
    for (int s = 1; s <= plan.num_steps; ++s) {
      apply_noisy(amps, num_qubits, ops, noise, rng);
      acc[s].add(magnetization(state.data(), weights));
    }
  }
  for (int s = 1; s <= plan.num_steps; ++s) {
    const NoisyEstimate e = acc[s].finish(shots);
    series.push_back({s, plan.time_at(s), e.mean, e.std_error});
  }
  return series;
}

void write_csv(std::ostream& out, const ObservableSeries& series) {
  out << "step,time,m_s\n";
  char buf[96];
  for (const auto& r : series) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", r.step, r.time, r.m_s);
    out << buf;
  }
}

void write_csv(std::ostream& out, const NoisySeries& series) {
  out << "step,time,m_s,stderr\n";
  char buf[128];
  for (const auto& r : series) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", r.step, r.time, r.m_s, r.std_error);
    out << buf;
  }
}

}  // namespace ybc
