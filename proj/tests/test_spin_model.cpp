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

#include "support/oracle.hpp"
#include "ybc/error.hpp"
#include "ybc/spin_model.hpp"

using namespace ybc;
using Catch::Approx;

TEST_CASE("classify follows the nonzero couplings", "[spin_model]") {
  CHECK(classify({-0.8, -0.2, 0.0}) == HamiltonianClass::XY);
  CHECK(classify({1.0, 0.0, 0.5}) == HamiltonianClass::XZ);
  CHECK(classify({0.0, 0.0, 0.0}) == HamiltonianClass::X);
  CHECK(classify({0.0, 2.0, 0.0}) == HamiltonianClass::Y);
  CHECK(classify({0.0, 0.0, -1.0}) == HamiltonianClass::Z);
  CHECK(classify({0.0, 1.0, 1.0}) == HamiltonianClass::YZ);
  CHECK(classify({1.0, 1.0, 1.0}) == HamiltonianClass::XYZ);
}

TEST_CASE("classify treats couplings within zero_tol as absent", "[spin_model]") {
  CHECK(classify({1.0, 1e-13, 0.0}) == HamiltonianClass::X);
  CHECK(classify({1.0, 1e-3, 0.0}, 1e-2) == HamiltonianClass::X);
  CHECK(classify({1.0, 1e-3, 0.0}, 0.0) == HamiltonianClass::XY);
  REQUIRE_THROWS_AS(classify({1.0, 0.0, 0.0}, -1.0), Error);
}

TEST_CASE("classify is scale invariant", "[spin_model][property]") {
  for (int trial = 0; trial < 500; ++trial) {
    CouplingParams j;
    const int mask = trial % 8;
    if (mask & 1) j.jx = testing::uniform(-2, 2);
    if (mask & 2) j.jy = testing::uniform(-2, 2);
    if (mask & 4) j.jz = testing::uniform(-2, 2);
    double c = testing::uniform(-5, 5);
    if (std::abs(c) < 1e-3) c = 1.0;
    const CouplingParams scaled{c * j.jx, c * j.jy, c * j.jz};
    REQUIRE(classify(j) == classify(scaled));
  }
}

TEST_CASE("class names round-trip through parse", "[spin_model]") {
  for (auto c : {HamiltonianClass::X, HamiltonianClass::Y, HamiltonianClass::Z,
                 HamiltonianClass::XY, HamiltonianClass::XZ, HamiltonianClass::YZ,
                 HamiltonianClass::XYZ}) {
    CHECK(parse_hamiltonian_class(to_string(c)) == c);
    CHECK(class_from_axes(has_x(c), has_y(c), has_z(c)) == c);
  }
  CHECK(parse_hamiltonian_class("xy") == HamiltonianClass::XY);
  REQUIRE_THROWS_AS(parse_hamiltonian_class("W"), Error);
}

TEST_CASE("step_angles is J times dt", "[spin_model]") {
  const Angles3 a = step_angles({-0.8, -0.2, 0.0}, 0.025);
  CHECK(a.theta_x == Approx(-0.02));
  CHECK(a.theta_y == Approx(-0.005));
  CHECK(a.theta_z == 0.0);
  CHECK(step_angles({1, 1, 1}, 0.0) == Angles3{0, 0, 0});
  CHECK(step_angles({2, 0, 0}, 0.5) == Angles3{1, 0, 0});
}

TEST_CASE("step_angles is linear in dt", "[spin_model][property]") {
  for (int trial = 0; trial < 200; ++trial) {
    const CouplingParams j{testing::uniform(-2, 2), testing::uniform(-2, 2),
                           testing::uniform(-2, 2)};
    const double dt = testing::uniform(0, 1);
    const double a = testing::uniform(-4, 4);
    const Angles3 lhs = step_angles(j, a * dt);
    const Angles3 rhs = step_angles(j, dt);
    REQUIRE(lhs.theta_x == Approx(a * rhs.theta_x).margin(1e-14));
    REQUIRE(lhs.theta_y == Approx(a * rhs.theta_y).margin(1e-14));
    REQUIRE(lhs.theta_z == Approx(a * rhs.theta_z).margin(1e-14));
  }
}

TEST_CASE("TrotterPlan rounds the step count and guards its inputs", "[spin_model]") {
  const TrotterPlan p = TrotterPlan::make(2.5, 0.025);
  CHECK(p.num_steps == 100);
  CHECK(p.time_at(40) == Approx(1.0));
  CHECK(TrotterPlan::make(1.0, 0.3).num_steps == 3);
  REQUIRE_THROWS_AS(TrotterPlan::make(1.0, 0.0), Error);
  REQUIRE_THROWS_AS(TrotterPlan::make(-1.0, 0.1), Error);
  REQUIRE_THROWS_AS(TrotterPlan::make(0.1, 1.0), Error);
  REQUIRE_THROWS_AS(TrotterPlan::make(1.0, std::nan("")), Error);
}

TEST_CASE("validate rejects non-finite couplings", "[spin_model]") {
  REQUIRE_NOTHROW(validate({1, 2, 3}));
  REQUIRE_THROWS_AS(validate({1, std::numeric_limits<double>::infinity(), 0}), Error);
}
