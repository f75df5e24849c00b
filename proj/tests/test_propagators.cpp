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

#include <numbers>

#include "support/oracle.hpp"
#include "ybc/error.hpp"
#include "ybc/propagators.hpp"

using namespace ybc;
using testing::Dense;

namespace {

constexpr double kPi = std::numbers::pi;

Angles3 random_angles() { return {testing::angle(), testing::angle(), testing::angle()}; }

double defect(const Unitary4& u) { return (u * u.adjoint() - Unitary4::Identity()).norm(); }

}  // namespace

TEST_CASE("pauli_pair_exponential matches the matrix exponential", "[propagators]") {
  for (int trial = 0; trial < 50; ++trial) {
    const double t = testing::angle();
    CHECK((pauli_pair_exponential(PauliAxis::X, t) - testing::pair_exp_oracle('X', t)).norm() < 1e-12);
    CHECK((pauli_pair_exponential(PauliAxis::Y, t) - testing::pair_exp_oracle('Y', t)).norm() < 1e-12);
    CHECK((pauli_pair_exponential(PauliAxis::Z, t) - testing::pair_exp_oracle('Z', t)).norm() < 1e-12);
  }
}

TEST_CASE("pauli_pair_exponential worked values", "[propagators]") {
  const Complex i{0, 1};
  CHECK((pauli_pair_exponential(PauliAxis::Z, 0.0) - Unitary4::Identity()).norm() == 0.0);
  Unitary4 z = Unitary4::Zero();
  z.diagonal() << i, -i, -i, i;
  CHECK((pauli_pair_exponential(PauliAxis::Z, kPi / 2) - z).norm() < 1e-15);
  const Unitary4 x = pauli_pair_exponential(PauliAxis::X, kPi / 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(x(k, k) - std::cos(kPi / 4)) < 1e-15);
    CHECK(std::abs(x(k, 3 - k) - i * std::sin(kPi / 4)) < 1e-15);
  }
}

TEST_CASE("xyz_propagator is the product of the commuting factors", "[propagators][property]") {
  for (int trial = 0; trial < 300; ++trial) {
    const Angles3 a = random_angles();
    const Unitary4 ex = pauli_pair_exponential(PauliAxis::X, a.theta_x);
    const Unitary4 ey = pauli_pair_exponential(PauliAxis::Y, a.theta_y);
    const Unitary4 ez = pauli_pair_exponential(PauliAxis::Z, a.theta_z);
    const Unitary4 u = xyz_propagator(a);
    REQUIRE((u - ex * ey * ez).norm() < 1e-12);
    REQUIRE((u - ez * ex * ey).norm() < 1e-12);
    REQUIRE((u - ey * ez * ex).norm() < 1e-12);
    REQUIRE((ex * ey - ey * ex).norm() < 1e-12);
    REQUIRE(defect(u) < 1e-12);
  }
}

TEST_CASE("xyz_propagator special values", "[propagators]") {
  CHECK((xyz_propagator({0, 0, 0}) - Unitary4::Identity()).norm() == 0.0);
  // theta_x = theta_y: the outer block is untouched, the inner one rotates by 2t.
  const double t = 0.37;
  const Unitary4 u = xyz_propagator({t, t, 0});
  CHECK(std::abs(u(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(u(3, 3) - 1.0) < 1e-15);
  CHECK(std::abs(u(0, 3)) < 1e-15);
  CHECK(std::abs(u(1, 1) - std::cos(2 * t)) < 1e-15);
  CHECK(std::abs(u(1, 2) - Complex(0, std::sin(2 * t))) < 1e-15);
}

TEST_CASE("r_matrix is the XZ propagator", "[propagators]") {
  for (int trial = 0; trial < 100; ++trial) {
    const RGateParams p{testing::angle(), testing::angle()};
    REQUIRE(r_matrix(p) == xyz_propagator({p.gamma, 0.0, p.delta}));
  }
  CHECK(r_matrix({0, 0}) == Unitary4::Identity());
  const double d = 0.4;
  Unitary4 diag = Unitary4::Zero();
  diag.diagonal() << std::polar(1.0, d), std::polar(1.0, -d), std::polar(1.0, -d),
      std::polar(1.0, d);
  CHECK((r_matrix({0, d}) - diag).norm() < 1e-15);
  // R(gamma, 0) = exp(i gamma XX) is the X-class propagator.
  CHECK((r_matrix({0.9, 0}) - testing::pair_exp_oracle('X', 0.9)).norm() < 1e-12);
}

TEST_CASE("conjugated R gates are the YZ and XY propagators", "[propagators]") {
  const Dense u1 = testing::kron(Dense(single_qubit_matrix(NativeGate::Kind::RZ, kPi / 2)),
                                 Dense(single_qubit_matrix(NativeGate::Kind::RZ, kPi / 2)));
  const Dense u2 = testing::kron(Dense(single_qubit_matrix(NativeGate::Kind::RX, kPi / 2)),
                                 Dense(single_qubit_matrix(NativeGate::Kind::RX, kPi / 2)));
  for (int trial = 0; trial < 100; ++trial) {
    const RGateParams p{testing::angle(), testing::angle()};
    const Dense r = r_matrix(p);
    const Dense c1 = u1 * r * u1.adjoint();
    const Dense c2 = u2 * r * u2.adjoint();
    REQUIRE((Dense(conjugated_r_matrix(p, Conjugation::U1)) - c1).norm() < 1e-12);
    REQUIRE((Dense(conjugated_r_matrix(p, Conjugation::U2)) - c2).norm() < 1e-12);
    REQUIRE((Dense(xyz_propagator(to_angles3(p, Conjugation::U1))) - c1).norm() < 1e-12);
    REQUIRE((Dense(xyz_propagator(to_angles3(p, Conjugation::U2))) - c2).norm() < 1e-12);
  }
}

TEST_CASE("from_angles3 maps two-axis triples onto R gates", "[propagators]") {
  {
    const RMapping m = from_angles3({0.3, 0.0, 0.4});
    CHECK(m.ok);
    CHECK(m.conj == Conjugation::None);
    CHECK(m.params == RGateParams{0.3, 0.4});
  }
  {
    const RMapping m = from_angles3({0.3, 0.1, 0.0});
    CHECK(m.ok);
    CHECK(m.conj == Conjugation::U2);
    CHECK(m.params == RGateParams{0.3, 0.1});
  }
  {
    const RMapping m = from_angles3({0.0, 0.2, 0.5});
    CHECK(m.ok);
    CHECK(m.conj == Conjugation::U1);
    CHECK(m.params == RGateParams{0.2, 0.5});
  }
  CHECK_FALSE(from_angles3({0.1, 0.2, 0.3}).ok);
}

TEST_CASE("from_angles3 preserves the unitary", "[propagators][property]") {
  for (int trial = 0; trial < 300; ++trial) {
    Angles3 a = random_angles();
    switch (trial % 3) {
      case 0: a.theta_x = 0; break;
      case 1: a.theta_y = 0; break;
      default: a.theta_z = 0; break;
    }
    const RMapping m = from_angles3(a);
    REQUIRE(m.ok);
    REQUIRE((conjugated_r_matrix(m.params, m.conj) - xyz_propagator(a)).norm() < 1e-12);
  }
}

TEST_CASE("map_to_class uses one conjugation per class", "[propagators]") {
  CHECK(conjugation_for(HamiltonianClass::X) == Conjugation::None);
  CHECK(conjugation_for(HamiltonianClass::Z) == Conjugation::None);
  CHECK(conjugation_for(HamiltonianClass::XZ) == Conjugation::None);
  CHECK(conjugation_for(HamiltonianClass::Y) == Conjugation::U1);
  CHECK(conjugation_for(HamiltonianClass::YZ) == Conjugation::U1);
  CHECK(conjugation_for(HamiltonianClass::XY) == Conjugation::U2);
  REQUIRE_THROWS_AS(conjugation_for(HamiltonianClass::XYZ), Error);

  // A pure-X gate inside an XY circuit still goes through U2.
  const RMapping m = map_to_class({0.5, 0.0, 0.0}, HamiltonianClass::XY);
  CHECK(m.conj == Conjugation::U2);
  CHECK((conjugated_r_matrix(m.params, m.conj) - xyz_propagator({0.5, 0, 0})).norm() < 1e-12);
  REQUIRE_THROWS_AS(map_to_class({0.5, 0.0, 0.1}, HamiltonianClass::XY), Error);
  REQUIRE_THROWS_AS(map_to_class({0.5, 0.2, 0.1}, HamiltonianClass::XYZ), Error);
}

TEST_CASE("decompose_xyz has 3 CX and 8 single-qubit gates", "[propagators]") {
  for (int trial = 0; trial < 20; ++trial) {
    const GateSequence seq = decompose_xyz(random_angles());
    REQUIRE(count_two_qubit(seq) == 3);
    REQUIRE(seq.size() - count_two_qubit(seq) == 8);
  }
}

TEST_CASE("decompose_xyz matches xyz_propagator up to global phase", "[propagators][property]") {
  CHECK(phase_aligned_distance(evaluate(decompose_xyz({0, 0, 0})), Unitary4::Identity()) < 1e-12);
  const double tx = 0.81;
  CHECK(phase_aligned_distance(evaluate(decompose_xyz({tx, 0, 0})), r_matrix({tx, 0})) < 1e-12);
  for (int trial = 0; trial < 500; ++trial) {
    const Angles3 a = random_angles();
    const Unitary4 u = evaluate(decompose_xyz(a));
    REQUIRE(phase_aligned_distance(u, xyz_propagator(a)) < 1e-10);
    REQUIRE(defect(u) < 1e-12);
  }
}

TEST_CASE("evaluate agrees with the Kronecker oracle gate by gate", "[propagators]") {
  const GateSequence seq{NativeGate::h(0), NativeGate::rx(1, 0.3), NativeGate::cx(0, 1),
                         NativeGate::s(1), NativeGate::rz(0, -1.1), NativeGate::cx(1, 0)};
  Dense expect = testing::identity_on(2);
  for (const auto& g : seq) {
    Dense m;
    if (g.kind == NativeGate::Kind::CX) {
      Dense p0 = Dense::Zero(2, 2), p1 = Dense::Zero(2, 2);
      p0(0, 0) = 1;
      p1(1, 1) = 1;
      const Dense x = testing::pauli('X');
      const Dense id = Dense::Identity(2, 2);
      m = g.qubit == 0 ? Dense(testing::kron(p0, id) + testing::kron(p1, x))
                       : Dense(testing::kron(id, p0) + testing::kron(x, p1));
    } else {
      m = testing::embed_single(single_qubit_matrix(g.kind, g.angle), 2, g.qubit);
    }
    expect = m * expect;
  }
  CHECK((Dense(evaluate(seq)) - expect).norm() < 1e-14);
}

TEST_CASE("special_case_sequence reproduces the class circuits", "[propagators]") {
  SECTION("X class is CX, RX(-2 gamma) on the top qubit, CX") {
    const GateSequence seq = special_case_sequence(HamiltonianClass::X, {0.7, 0.0});
    REQUIRE(seq.size() == 3);
    CHECK(seq[0].kind == NativeGate::Kind::CX);
    CHECK(seq[1].kind == NativeGate::Kind::RX);
    CHECK(seq[1].qubit == 0);
    CHECK(seq[1].angle == Catch::Approx(-1.4));
    CHECK(seq[2].kind == NativeGate::Kind::CX);
  }
  SECTION("Z class is CX, RZ(-2 delta) on the bottom qubit, CX") {
    const GateSequence seq = special_case_sequence(HamiltonianClass::Z, {0.0, 0.25});
    REQUIRE(seq.size() == 3);
    CHECK(seq[1].kind == NativeGate::Kind::RZ);
    CHECK(seq[1].qubit == 1);
    CHECK(seq[1].angle == Catch::Approx(-0.5));
  }
  SECTION("XYZ is rejected") {
    REQUIRE_THROWS_AS(special_case_sequence(HamiltonianClass::XYZ, {0.1, 0.2}), Error);
  }
}

TEST_CASE("special_case_sequence matches the conjugated R gate", "[propagators][property]") {
  const HamiltonianClass classes[] = {HamiltonianClass::X,  HamiltonianClass::Y,
                                      HamiltonianClass::Z,  HamiltonianClass::XY,
                                      HamiltonianClass::XZ, HamiltonianClass::YZ};
  for (HamiltonianClass cls : classes) {
    for (int trial = 0; trial < 100; ++trial) {
      RGateParams p{testing::angle(), testing::angle()};
      if (cls == HamiltonianClass::X || cls == HamiltonianClass::Y) p.delta = 0;
      if (cls == HamiltonianClass::Z) p.gamma = 0;
      const GateSequence seq = special_case_sequence(cls, p);
      REQUIRE(count_two_qubit(seq) == 2);
      const Unitary4 target = conjugated_r_matrix(p, conjugation_for(cls));
      REQUIRE(phase_aligned_distance(evaluate(seq), target) < 1e-10);
    }
  }
}
