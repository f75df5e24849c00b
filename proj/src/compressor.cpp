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

#include "ybc/compressor.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "ybc/error.hpp"
#include "ybc/propagators.hpp"

namespace ybc {

namespace {

// One gate of a block flattened into a time-ordered word.
struct Letter {
  int pair;
  RGateParams p;
};

bool overlaps(int pair, int lo_qubit, int hi_qubit) {
  return pair + 1 >= lo_qubit && pair <= hi_qubit;
}

RGateParams as_r(const PairGate& g, HamiltonianClass cls, Conjugation conj) {
  if (g.is_r() && g.conj == conj) return std::get<RGateParams>(g.params);
  return map_to_class(g.angles(), cls).params;
}

// Solves the YBE for time-ordered gates (a, b, c) on pairs (j, k, j) and
// returns the time-ordered replacement on pairs (k, j, k).
std::array<Letter, 3> ybe_rewrite(const Letter& a, const Letter& b, const Letter& c,
                                  const YbeOptions& options, double& residual,
                                  MoveStats* stats) {
  // Matrix-product order is reverse time order; the lower pair acting first
  // makes the product (R_c (x) 1)(1 (x) R_b)(R_a (x) 1), the LEFT form.
  YbeTriple t;
  t.form = a.pair < b.pair ? YbeForm::Left : YbeForm::Right;
  t.g = {c.p, b.p, a.p};
  const YbeSolution s = solve(t, options);
  residual += s.residual;
  if (stats) {
    ++stats->ybe_moves;
    if (s.method == SolveMethod::NumericFallback) ++stats->numeric_fallbacks;
  }
  return {Letter{b.pair, s.triple.g[2]}, Letter{a.pair, s.triple.g[1]},
          Letter{b.pair, s.triple.g[0]}};
}

// Turns one reduced word into another for the same permutation by moving
// each target letter to the end of the shrinking prefix (commutations and
// Yang-Baxter moves only).
class WordRewriter {
 public:
  WordRewriter(std::vector<Letter>& word, const YbeOptions& options, MoveStats& stats,
               double& residual)
      : w_(word), options_(options), stats_(stats), residual_(residual) {}

  void transform(const std::vector<int>& target) {
    if (target.size() != w_.size()) {
      throw Error(ErrorCode::Numerical, "reflection target has the wrong length");
    }
    for (std::size_t l = target.size(); l > 0; --l) move_to_end(l, target[l - 1]);
  }

 private:
  // Rewrites w[0, l) so that it ends with letter k.
  void move_to_end(std::size_t l, int k) {
    if (l == 0) throw Error(ErrorCode::Numerical, "reflection word is not reduced");
    const int j = w_[l - 1].pair;
    if (j == k) return;
    if (std::abs(j - k) >= 2) {
      move_to_end(l - 1, k);
      std::swap(w_[l - 2], w_[l - 1]);
      ++stats_.commutations;
      return;
    }
    move_to_end(l - 1, k);
    move_to_end(l - 2, j);
    // w ends with (j, k, j).
    const auto out = ybe_rewrite(w_[l - 3], w_[l - 2], w_[l - 1], options_, residual_, &stats_);
    w_[l - 3] = out[0];
    w_[l - 2] = out[1];
    w_[l - 1] = out[2];
  }

  std::vector<Letter>& w_;
  const YbeOptions& options_;
  MoveStats& stats_;
  double& residual_;
};

std::vector<int> column_pairs(int num_qubits, int parity) {
  std::vector<int> pairs;
  for (int i = parity; i + 1 < num_qubits; i += 2) pairs.push_back(i);
  return pairs;
}

int square_columns(int num_qubits) { return num_qubits == 2 ? 1 : num_qubits; }

}  // namespace

PairGate merge(const PairGate& a, const PairGate& b) {
  if (a.pair != b.pair) {
    throw Error(ErrorCode::InvalidArgument, "merge needs gates on the same pair, got " +
                                                std::to_string(a.pair) + " and " +
                                                std::to_string(b.pair));
  }
  if (a.is_r() != b.is_r() || (a.is_r() && a.conj != b.conj)) {
    throw Error(ErrorCode::InvalidArgument, "merge needs gates of the same kind");
  }
  PairGate out = a;
  if (a.is_r()) {
    const auto& p = std::get<RGateParams>(a.params);
    const auto& q = std::get<RGateParams>(b.params);
    out.params = RGateParams{p.gamma + q.gamma, p.delta + q.delta};
  } else {
    const auto& p = std::get<Angles3>(a.params);
    const auto& q = std::get<Angles3>(b.params);
    out.params = Angles3{p.theta_x + q.theta_x, p.theta_y + q.theta_y, p.theta_z + q.theta_z};
  }
  return out;
}

Circuit apply_move(const Circuit& c, const RewriteMove& move, const YbeOptions& options,
                   double* residual) {
  c.validate();
  std::vector<PairGate> gates = c.gates();
  const std::size_t p = move.position;
  if (p >= gates.size()) {
    throw Error(ErrorCode::InvalidArgument, "move position " + std::to_string(p) +
                                                " outside a " + std::to_string(gates.size()) +
                                                "-gate circuit");
  }
  const int a = gates[p].pair;

  if (move.kind == RewriteMove::Kind::Merge) {
    std::size_t q = p + 1;
    while (q < gates.size() && !overlaps(gates[q].pair, a, a + 1)) ++q;
    if (q == gates.size() || gates[q].pair != a) {
      throw Error(ErrorCode::InvalidArgument,
                  "no mergeable partner for the gate at position " + std::to_string(p));
    }
    gates[p] = merge(gates[p], gates[q]);
    gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(q));
    return columnize(Circuit::from_gates(c.num_qubits, gates));
  }

  // Second gate: the next one touching pair a's qubits; third: the next one
  // touching the three-qubit window. Anything skipped must stay outside the
  // window so it commutes with the whole pattern.
  auto mismatch = [&] {
    throw Error(ErrorCode::InvalidArgument,
                "no Yang-Baxter pattern at position " + std::to_string(p));
  };
  std::size_t q = p + 1;
  while (q < gates.size() && !overlaps(gates[q].pair, a, a + 1)) ++q;
  if (q == gates.size() || std::abs(gates[q].pair - a) != 1) mismatch();
  const int b = gates[q].pair;
  const int lo = std::min(a, b), hi = lo + 2;
  for (std::size_t k = p + 1; k < q; ++k) {
    if (overlaps(gates[k].pair, lo, hi)) mismatch();
  }
  std::size_t r = q + 1;
  while (r < gates.size() && !overlaps(gates[r].pair, lo, hi)) ++r;
  if (r == gates.size() || gates[r].pair != a) mismatch();
  const PairGate& g0 = gates[p];
  if (!g0.is_r() || !gates[q].is_r() || !gates[r].is_r() || gates[q].conj != g0.conj ||
      gates[r].conj != g0.conj) {
    throw Error(ErrorCode::InvalidArgument,
                "Yang-Baxter moves need R gates with one conjugation");
  }
  double acc = 0.0;
  const auto out = ybe_rewrite({a, std::get<RGateParams>(g0.params)},
                               {b, std::get<RGateParams>(gates[q].params)},
                               {a, std::get<RGateParams>(gates[r].params)}, options, acc, nullptr);
  const Conjugation conj = g0.conj;
  gates[p] = PairGate::r(out[0].pair, out[0].p, conj);
  gates[q] = PairGate::r(out[1].pair, out[1].p, conj);
  gates[r] = PairGate::r(out[2].pair, out[2].p, conj);
  if (residual) *residual += acc;
  return columnize(Circuit::from_gates(c.num_qubits, gates));
}

CompressedBlock::CompressedBlock(int num_qubits, HamiltonianClass cls)
    : num_qubits_(num_qubits), class_(cls), conj_(conjugation_for(cls)) {
  if (num_qubits < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "num_qubits must be at least 2, got " + std::to_string(num_qubits));
  }
}

std::size_t CompressedBlock::gate_count() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

int CompressedBlock::start_parity() const {
  return columns_.empty() ? -1 : columns_.front().front().pair & 1;
}

Circuit CompressedBlock::to_circuit() const {
  Circuit c;
  c.num_qubits = num_qubits_;
  c.columns = columns_;
  for (auto& col : c.columns) {
    for (auto& g : col) g.params = canonicalize(std::get<RGateParams>(g.params));
  }
  return c;
}

CompressedBlock CompressedBlock::padded_to_square() const {
  CompressedBlock out = *this;
  int parity = columns_.empty() ? 1 : columns_.back().front().pair & 1;
  while (static_cast<int>(out.columns_.size()) < square_columns(num_qubits_)) {
    parity ^= 1;
    Column col;
    for (int pair : column_pairs(num_qubits_, parity)) col.push_back(PairGate::r(pair, {}, conj_));
    out.columns_.push_back(std::move(col));
  }
  return out;
}

CompressedBlock reflect_block(const CompressedBlock& b, const YbeOptions& options) {
  const int n = b.num_qubits_;
  if (static_cast<int>(b.columns_.size()) != square_columns(n)) {
    throw Error(ErrorCode::InvalidArgument, "reflect_block needs a full " + std::to_string(n) +
                                                "-column block");
  }
  CompressedBlock out = b;
  if (n == 2) return out;
  std::vector<Letter> word;
  for (const auto& col : b.columns_) {
    for (const auto& g : col) word.push_back({g.pair, std::get<RGateParams>(g.params)});
  }
  const int new_start = b.start_parity() ^ 1;
  std::vector<int> target;
  std::vector<std::size_t> sizes;
  for (int c = 0; c < n; ++c) {
    const auto pairs = column_pairs(n, (new_start + c) & 1);
    target.insert(target.end(), pairs.begin(), pairs.end());
    sizes.push_back(pairs.size());
  }
  WordRewriter(word, options, out.stats_, out.residual_).transform(target);
  ++out.stats_.reflections;

  out.columns_.clear();
  std::size_t k = 0;
  for (std::size_t size : sizes) {
    Column col;
    for (std::size_t m = 0; m < size; ++m, ++k) {
      if (word[k].pair != target[k]) {
        throw Error(ErrorCode::Numerical, "reflection produced an unexpected gate order");
      }
      col.push_back(PairGate::r(word[k].pair, word[k].p, b.conj_));
    }
    out.columns_.push_back(std::move(col));
  }
  return out;
}

CompressedBlock absorb_column(const CompressedBlock& b, const Column& column,
                              const YbeOptions& options) {
  if (column.empty()) return b;
  const int parity = column_parity(column);
  if (parity < 0) {
    throw Error(ErrorCode::InvalidArgument, "absorb_column needs a single-parity column");
  }
  const int n = b.num_qubits_;
  Column full;
  for (int pair : column_pairs(n, parity)) {
    RGateParams p{};
    for (const auto& g : column) {
      if (g.pair == pair) p = as_r(g, b.class_, b.conj_);
    }
    full.push_back(PairGate::r(pair, p, b.conj_));
  }
  for (const auto& g : column) {
    if (g.pair < 0 || g.pair > n - 2) {
      throw Error(ErrorCode::InvalidArgument,
                  "pair index " + std::to_string(g.pair) + " outside the block");
    }
  }

  if (b.columns_.empty()) {
    CompressedBlock out = b;
    out.columns_.push_back(std::move(full));
    return out;
  }
  const int last_parity = b.columns_.back().front().pair & 1;
  if (last_parity != parity && static_cast<int>(b.columns_.size()) < square_columns(n)) {
    CompressedBlock out = b;
    out.columns_.push_back(std::move(full));
    return out;
  }
  CompressedBlock out = last_parity == parity ? b : reflect_block(b, options);
  Column& last = out.columns_.back();
  for (std::size_t k = 0; k < last.size(); ++k) last[k] = merge(last[k], full[k]);
  out.stats_.merges += last.size();
  return out;
}

CompressedBlock absorb_layer(const CompressedBlock& b, const std::vector<Column>& layer,
                             const YbeOptions& options) {
  CompressedBlock out = b;
  for (const auto& col : layer) {
    for (int parity = 0; parity < 2; ++parity) {
      Column sub;
      for (const auto& g : col) {
        if ((g.pair & 1) == parity) sub.push_back(g);
      }
      if (!sub.empty()) out = absorb_column(out, sub, options);
    }
  }
  return out;
}

CompressedBlock compress(const Circuit& c, const YbeOptions& options) {
  c.validate();
  const HamiltonianClass cls = circuit_class(c);
  if (cls == HamiltonianClass::XYZ) {
    throw Error(ErrorCode::UnsupportedClass,
                "circuits with all three coupling axes cannot be compressed");
  }
  CompressedBlock block(c.num_qubits, cls);
  for (const auto& col : c.columns) {
    block = absorb_layer(block, {col}, options);
    if (block.residual() > kResidualBudget) {
      throw Error(ErrorCode::ResidualBudget,
                  "accumulated rewrite residual " + std::to_string(block.residual()) +
                      " exceeds the budget of " + std::to_string(kResidualBudget));
    }
  }
  return block;
}

}  // namespace ybc
