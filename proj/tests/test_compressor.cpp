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

#include <catch_amalgamated.hpp>

#include <deque>
#include <map>
#include <vector>

#include "support/oracle.hpp"
#include "ybc/compressor.hpp"
#include "ybc/error.hpp"

using namespace ybc;
using testing::Dense;

namespace {

RGateParams random_r() { return {testing::angle(), testing::angle()}; }

CouplingParams couplings_for(HamiltonianClass cls) {
  return {has_x(cls) ? -0.8 : 0.0, has_y(cls) ? -0.2 : 0.0, has_z(cls) ? 0.5 : 0.0};
}

Circuit trotter(int n, HamiltonianClass cls, int steps, double dt = 0.05) {
  return build_trotter_circuit(n, couplings_for(cls), TrotterPlan::make(steps * dt, dt));
}

// A full square block of random R gates starting on even pairs.
CompressedBlock random_square(int n) {
  CompressedBlock b(n, HamiltonianClass::XZ);
  for (int c = 0; c < n; ++c) {
    Column col;
    for (int pair = c & 1; pair + 1 < n; pair += 2) col.push_back(PairGate::r(pair, random_r()));
    b = absorb_column(b, col);
  }
  return b;
}

std::vector<int> square_word(int n, int start) {
  std::vector<int> w;
  for (int c = 0; c < n; ++c) {
    for (int pair = (start + c) & 1; pair + 1 < n; pair += 2) w.push_back(pair);
  }
  return w;
}

// Fewest Yang-Baxter moves turning one braid word into another when
// commutations of distant letters are free (0-1 breadth-first search).
int min_ybe_moves(const std::vector<int>& from, const std::vector<int>& to) {
  std::map<std::vector<int>, int> dist{{from, 0}};
  std::deque<std::vector<int>> queue{from};
  while (!queue.empty()) {
    const std::vector<int> w = queue.front();
    queue.pop_front();
    const int d = dist[w];
    if (w == to) return d;
    auto relax = [&](const std::vector<int>& v, int cost) {
      auto it = dist.find(v);
      if (it != dist.end() && it->second <= d + cost) return;
      dist[v] = d + cost;
      if (cost == 0) queue.push_front(v); else queue.push_back(v);
    };
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (std::abs(w[i] - w[i + 1]) >= 2) {
        auto v = w;
        std::swap(v[i], v[i + 1]);
        relax(v, 0);
      }
    }
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
      if (w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1) {
        auto v = w;
        v[i] = v[i + 2] = w[i + 1];
        v[i + 1] = w[i];
        relax(v, 1);
      }
    }
  }
  return -1;
}

Circuit block_circuit(const CompressedBlock& b) { return b.to_circuit(); }

}  // namespace

TEST_CASE("merge adds parameters exactly", "[compressor]") {
  for (int trial = 0; trial < 200; ++trial) {
    const RGateParams p = random_r(), q = random_r();
    const auto conj = static_cast<Conjugation>(trial % 3);
    const PairGate m = merge(PairGate::r(1, p, conj), PairGate::r(1, q, conj));
    REQUIRE(m.pair == 1);
    REQUIRE(m.conj == conj);
    REQUIRE(std::get<RGateParams>(m.params) == RGateParams{p.gamma + q.gamma, p.delta + q.delta});
    const Unitary4 product = conjugated_r_matrix(q, conj) * conjugated_r_matrix(p, conj);
    REQUIRE((pair_unitary(m) - product).norm() < 1e-12);
  }
  const Angles3 a{0.1, 0.2, 0.3}, b{-0.4, 0.5, 0.6};
  const PairGate x = merge(PairGate::xyz(0, a), PairGate::xyz(0, b));
  CHECK(std::get<Angles3>(x.params) == Angles3{0.1 - 0.4, 0.2 + 0.5, 0.3 + 0.6});
  CHECK((pair_unitary(x) - xyz_propagator(b) * xyz_propagator(a)).norm() < 1e-12);
}

TEST_CASE("merging a gate with its inverse gives the identity", "[compressor]") {
  const PairGate g = PairGate::r(0, random_r(), Conjugation::U1);
  const PairGate m = merge(g, inverse(g));
  CHECK(std::get<RGateParams>(m.params) == RGateParams{0.0, 0.0});
  CHECK((pair_unitary(m) - Unitary4::Identity()).norm() < 1e-15);
}

TEST_CASE("merge rejects mismatched gates", "[compressor]") {
  REQUIRE_THROWS_AS(merge(PairGate::r(0, {}), PairGate::r(1, {})), Error);
  REQUIRE_THROWS_AS(merge(PairGate::r(0, {}), PairGate::xyz(0, {})), Error);
  REQUIRE_THROWS_AS(merge(PairGate::r(0, {}, Conjugation::U1), PairGate::r(0, {})), Error);
}

TEST_CASE("apply_move merges across commuting gates", "[compressor]") {
  const Circuit c = Circuit::from_gates(
      4, {PairGate::r(0, random_r()), PairGate::r(2, random_r()), PairGate::r(0, random_r())});
  const Circuit merged = apply_move(c, {RewriteMove::Kind::Merge, 0});
  CHECK(merged.gate_count() == 2);
  CHECK(phase_aligned_distance(unitary_of(merged), unitary_of(c)) < 1e-12);
  const Circuit blocked = Circuit::from_gates(
      3, {PairGate::r(0, random_r()), PairGate::r(1, random_r()), PairGate::r(0, random_r())});
  REQUIRE_THROWS_AS(apply_move(blocked, {RewriteMove::Kind::Merge, 0}), Error);
}

TEST_CASE("apply_move performs a Yang-Baxter move", "[compressor]") {
  for (int trial = 0; trial < 50; ++trial) {
    const int lower = trial % 2;
    const auto conj = static_cast<Conjugation>(trial % 3);
    const std::vector<PairGate> gates{PairGate::r(lower, random_r(), conj),
                                      PairGate::r(1 - lower, random_r(), conj),
                                      PairGate::r(lower, random_r(), conj)};
    const Circuit c = Circuit::from_gates(3, gates);
    double residual = 0.0;
    const Circuit moved = apply_move(c, {RewriteMove::Kind::Ybe, 0}, {}, &residual);
    const auto out = moved.gates();
    REQUIRE(out.size() == 3);
    CHECK(out[0].pair == 1 - lower);
    CHECK(out[1].pair == lower);
    CHECK(out[2].pair == 1 - lower);
    CHECK(residual < 1e-9);
    REQUIRE(phase_aligned_distance(unitary_of(moved), unitary_of(c)) < 1e-9);
  }
}

TEST_CASE("apply_move skips gates outside the window", "[compressor]") {
  const Circuit c = Circuit::from_gates(
      5, {PairGate::r(0, random_r()), PairGate::r(3, random_r()), PairGate::r(1, random_r()),
          PairGate::r(3, random_r()), PairGate::r(0, random_r())});
  const Circuit moved = apply_move(c, {RewriteMove::Kind::Ybe, 0});
  CHECK(phase_aligned_distance(unitary_of(moved), unitary_of(c)) < 1e-9);
}

TEST_CASE("apply_move rejects non-patterns", "[compressor]") {
  const Circuit no_third = Circuit::from_gates(3, {PairGate::r(0, {}), PairGate::r(1, {})});
  REQUIRE_THROWS_AS(apply_move(no_third, {RewriteMove::Kind::Ybe, 0}), Error);
  const Circuit xyz = Circuit::from_gates(
      3, {PairGate::xyz(0, {}), PairGate::xyz(1, {}), PairGate::xyz(0, {})});
  REQUIRE_THROWS_AS(apply_move(xyz, {RewriteMove::Kind::Ybe, 0}), Error);
  REQUIRE_THROWS_AS(apply_move(no_third, {RewriteMove::Kind::Ybe, 9}), Error);
}

TEST_CASE("reflecting a three-qubit block takes one move", "[compressor]") {
  for (int trial = 0; trial < 20; ++trial) {
    const CompressedBlock b = random_square(3);
    REQUIRE(b.start_parity() == 0);
    const CompressedBlock r = reflect_block(b);
    CHECK(r.start_parity() == 1);
    CHECK(r.stats().ybe_moves == 1);
    CHECK(r.gate_count() == 3);
    REQUIRE(operator_distance(block_circuit(r), block_circuit(b)) < 1e-9);
  }
}

TEST_CASE("reflecting a four-qubit block takes the minimal four moves", "[compressor]") {
  CHECK(min_ybe_moves(square_word(4, 0), square_word(4, 1)) == 4);
  const CompressedBlock b = random_square(4);
  const CompressedBlock r = reflect_block(b);
  CHECK(r.stats().ybe_moves == 4);
  CHECK(r.start_parity() == 1);
  REQUIRE(operator_distance(block_circuit(r), block_circuit(b)) < 1e-9);
}

TEST_CASE("reflection uses C(N, 3) moves and preserves the operator", "[compressor][property]") {
  for (int n = 2; n <= 8; ++n) {
    const CompressedBlock b = random_square(n);
    const CompressedBlock r = reflect_block(b);
    const std::size_t choose3 = static_cast<std::size_t>(n * (n - 1) * (n - 2) / 6);
    CHECK(r.stats().ybe_moves == choose3);
    REQUIRE(operator_distance(block_circuit(r), block_circuit(b)) < 1e-8);
    const CompressedBlock back = reflect_block(r);
    CHECK(back.start_parity() == b.start_parity());
    REQUIRE(operator_distance(block_circuit(back), block_circuit(b)) < 1e-8);
  }
}

TEST_CASE("reflect_block needs a full block", "[compressor]") {
  CompressedBlock b(4, HamiltonianClass::X);
  b = absorb_column(b, {PairGate::r(0, {0.1, 0}), PairGate::r(2, {0.1, 0})});
  REQUIRE_THROWS_AS(reflect_block(b), Error);
}

TEST_CASE("absorbing columns grows to the square and stops", "[compressor]") {
  const int n = 5;
  const Circuit c = trotter(n, HamiltonianClass::XZ, 6);
  CompressedBlock b(n, HamiltonianClass::XZ);
  std::size_t k = 0;
  for (const auto& col : c.columns) {
    b = absorb_column(b, col);
    ++k;
    REQUIRE(b.columns().size() == std::min<std::size_t>(k, n));
    Circuit prefix{n, {c.columns.begin(), c.columns.begin() + static_cast<std::ptrdiff_t>(k)}};
    REQUIRE(operator_distance(block_circuit(b), prefix) < 1e-8);
  }
  CHECK(b.gate_count() == static_cast<std::size_t>(n * (n - 1) / 2));
}

TEST_CASE("absorb_column pads missing pairs with identities", "[compressor]") {
  CompressedBlock b(5, HamiltonianClass::X);
  b = absorb_column(b, {PairGate::xyz(2, {0.3, 0, 0})});
  REQUIRE(b.columns().size() == 1);
  CHECK(b.columns()[0].size() == 2);
  REQUIRE_THROWS_AS(absorb_column(b, {PairGate::r(0, {}), PairGate::r(1, {})}), Error);
}

TEST_CASE("padded_to_square adds identity columns", "[compressor]") {
  CompressedBlock b(4, HamiltonianClass::Y);
  b = absorb_column(b, {PairGate::xyz(1, {0, 0.2, 0})});
  const CompressedBlock sq = b.padded_to_square();
  CHECK(sq.columns().size() == 4);
  CHECK(sq.gate_count() == 6);
  CHECK(operator_distance(block_circuit(sq), block_circuit(b)) < 1e-12);
  CHECK(sq.start_parity() == 1);
}

TEST_CASE("compress preserves the operator for every class", "[compressor][property]") {
  const HamiltonianClass classes[] = {HamiltonianClass::X,  HamiltonianClass::Y,
                                      HamiltonianClass::Z,  HamiltonianClass::XY,
                                      HamiltonianClass::XZ, HamiltonianClass::YZ};
  for (HamiltonianClass cls : classes) {
    for (int n = 2; n <= 6; ++n) {
      for (int steps : {1, n, 3 * n}) {
        const Circuit c = trotter(n, cls, steps);
        const CompressedBlock b = compress(c);
        INFO("class " << to_string(cls) << " N " << n << " steps " << steps);
        REQUIRE(b.gate_count() <= static_cast<std::size_t>(n * (n - 1) / 2));
        REQUIRE(b.layer_count() <= (n + 1) / 2);
        REQUIRE(b.to_circuit().is_alternating());
        REQUIRE(operator_distance(b.to_circuit(), c) < 1e-7);
      }
    }
  }
}

TEST_CASE("a six-qubit chain compresses to fifteen gates", "[compressor]") {
  const Circuit c = trotter(6, HamiltonianClass::XY, 40, 0.025);
  const CompressedBlock b = compress(c);
  CHECK(b.gate_count() == 15);
  CHECK(b.residual() < kResidualBudget);
  CHECK(operator_distance(b.to_circuit(), c) < 1e-7);
}

TEST_CASE("compressed size does not depend on the step count", "[compressor][property]") {
  for (int n = 2; n <= 7; ++n) {
    const std::size_t few = compress(trotter(n, HamiltonianClass::XZ, n)).gate_count();
    const std::size_t many = compress(trotter(n, HamiltonianClass::XZ, 10 * n)).gate_count();
    REQUIRE(few == many);
  }
}

TEST_CASE("compress is deterministic", "[compressor]") {
  const Circuit c = trotter(5, HamiltonianClass::XY, 12);
  const Circuit a = compress(c).to_circuit();
  const Circuit b = compress(c).to_circuit();
  CHECK(a.columns == b.columns);
}

TEST_CASE("compress rejects the full XYZ class", "[compressor]") {
  const Circuit c = build_trotter_circuit(3, {1, 0.5, 0.2}, TrotterPlan::make(0.1, 0.05));
  try {
    compress(c);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedClass);
  }
  REQUIRE_THROWS_AS(CompressedBlock(3, HamiltonianClass::XYZ), Error);
}

TEST_CASE("compressing arbitrary alternating input", "[compressor]") {
  // Mixed per-gate angles, still within one class.
  std::vector<PairGate> gates;
  for (int layer = 0; layer < 6; ++layer) {
    for (int pair = layer & 1; pair + 1 < 5; pair += 2) {
      gates.push_back(PairGate::xyz(pair, {testing::angle(), 0.0, testing::angle()}));
    }
  }
  const Circuit c = columnize(Circuit::from_gates(5, gates));
  const CompressedBlock b = compress(c);
  CHECK(b.gate_count() == 10);
  CHECK(operator_distance(b.to_circuit(), c) < 1e-7);
}
