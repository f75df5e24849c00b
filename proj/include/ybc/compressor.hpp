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

// Rewrite engine: merge identity, Yang-Baxter moves, block reflection and the
// absorption loop that folds any number of Trotter layers into a square block
// of N alternating columns (N(N-1)/2 gates).

#include <cstddef>
#include <vector>

#include "ybc/circuit.hpp"
#include "ybc/spin_model.hpp"
#include "ybc/ybe.hpp"

namespace ybc {

/// Same-pair gates combine by adding parameters. Both gates must share pair,
/// parameter kind and conjugation.
PairGate merge(const PairGate& a, const PairGate& b);

struct RewriteMove {
  enum class Kind { Merge, Ybe };
  Kind kind = Kind::Ybe;
  /// Index of the first gate of the pattern in Circuit::gates() order. For a
  /// merge, the partner is the next gate on the same pair.
  std::size_t position = 0;
};

/// Applies one rewrite and returns the columnized result. A YBE move needs
/// three consecutive R gates on pairs (i, i+1, i) or (i+1, i, i+1) with one
/// conjugation; the move's verified residual is added to *residual when
/// given. Throws InvalidArgument on a pattern mismatch, propagates Unsolved.
Circuit apply_move(const Circuit& c, const RewriteMove& move, const YbeOptions& options = {},
                   double* residual = nullptr);

struct MoveStats {
  std::size_t merges = 0;
  std::size_t ybe_moves = 0;
  std::size_t commutations = 0;
  std::size_t reflections = 0;
  std::size_t numeric_fallbacks = 0;
};

/// A block of alternating columns of R gates, at most N columns. Every
/// column is full: all pairs of its parity are present, identity R(0,0)
/// where the input had no gate.
class CompressedBlock {
 public:
  /// Throws UnsupportedClass for XYZ.
  CompressedBlock(int num_qubits, HamiltonianClass cls);

  int num_qubits() const { return num_qubits_; }
  HamiltonianClass hamiltonian_class() const { return class_; }
  Conjugation conjugation() const { return conj_; }
  const std::vector<Column>& columns() const { return columns_; }
  std::size_t gate_count() const;
  /// Alternating layers (column pairs), ceil(columns / 2).
  int layer_count() const { return static_cast<int>((columns_.size() + 1) / 2); }
  /// Parity of the first column, -1 when empty.
  int start_parity() const;

  const MoveStats& stats() const { return stats_; }
  /// Sum of verified per-move residuals.
  double residual() const { return residual_; }

  /// The block as a circuit with angles reduced to (-pi, pi].
  Circuit to_circuit() const;
  /// The block extended with identity columns to the full N-column square.
  CompressedBlock padded_to_square() const;

 private:
  friend CompressedBlock reflect_block(const CompressedBlock& b, const YbeOptions& options);
  friend CompressedBlock absorb_column(const CompressedBlock& b, const Column& column,
                                       const YbeOptions& options);

  int num_qubits_;
  HamiltonianClass class_;
  Conjugation conj_;
  std::vector<Column> columns_;
  MoveStats stats_;
  double residual_ = 0.0;
};

/// Rewrites a full N-column block into the mirror-image column sequence
/// (even-start <-> odd-start) with C(N, 3) Yang-Baxter moves.
CompressedBlock reflect_block(const CompressedBlock& b, const YbeOptions& options = {});

/// Absorbs one single-parity column (gates in the block's class; missing
/// pairs are treated as identity).
CompressedBlock absorb_column(const CompressedBlock& b, const Column& column,
                              const YbeOptions& options = {});

/// Absorbs a layer: its columns are split into even and odd sub-columns and
/// absorbed in order.
CompressedBlock absorb_layer(const CompressedBlock& b, const std::vector<Column>& layer,
                             const YbeOptions& options = {});

/// Residual above which compression aborts.
inline constexpr double kResidualBudget = 1e-6;

/// Compresses a whole circuit. Throws UnsupportedClass for XYZ circuits and
/// ResidualBudget when the accumulated residual exceeds kResidualBudget.
CompressedBlock compress(const Circuit& c, const YbeOptions& options = {});

}  // namespace ybc
