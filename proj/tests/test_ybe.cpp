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

#include <cmath>
#include <numbers>

#include "support/oracle.hpp"
#include "ybc/error.hpp"
#include "ybc/ybe.hpp"

using namespace ybc;
using testing::Dense;

namespace {

constexpr double kPi = std::numbers::pi;

RGateParams random_r() { return {testing::angle(), testing::angle()}; }

YbeTriple random_triple(YbeForm form) { return {{random_r(), random_r(), random_r()}, form}; }

// Smallest closed-form denominator built from the input angles.
double input_margin(const YbeTriple& t) {
  const double gp = t.g[0].gamma + t.g[2].gamma, dp = t.g[0].delta + t.g[2].delta;
  return std::min({std::abs(std::cos(gp)), std::abs(std::sin(gp)), std::abs(std::cos(dp)),
                   std::abs(std::sin(dp)), std::abs(std::cos(t.g[1].gamma)),
                   std::abs(std::cos(t.g[1].delta))});
}

YbeTriple random_nondegenerate(YbeForm form) {
  for (;;) {
    const YbeTriple t = random_triple(form);
    if (input_margin(t) > 1e-3) return t;
  }
}

Dense triple_oracle(const YbeTriple& t) {
  const Dense id = Dense::Identity(2, 2);
  Dense out = testing::identity_on(3);
  for (int k = 0; k < 3; ++k) {
    const Dense r = r_matrix(t.g[k]);
    const bool upper = (t.form == YbeForm::Left) == (k != 1);
    out = out * (upper ? testing::kron(r, id) : testing::kron(id, r));
  }
  return out;
}

}  // namespace

TEST_CASE("triple_unitary is the product in matrix order", "[ybe]") {
  for (int trial = 0; trial < 20; ++trial) {
    for (YbeForm f : {YbeForm::Left, YbeForm::Right}) {
      const YbeTriple t = random_triple(f);
      REQUIRE((Dense(triple_unitary(t)) - triple_oracle(t)).norm() < 1e-13);
    }
  }
}

TEST_CASE("analytic solve on random non-degenerate triples", "[ybe][property]") {
  int analytic = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const YbeTriple in = random_nondegenerate(trial % 2 ? YbeForm::Right : YbeForm::Left);
    const YbeSolution s = solve(in);
    REQUIRE(s.triple.form == opposite(in.form));
    const RelationReport r = verify_relations(in, s.triple);
    REQUIRE(r.matrix_residual < 1e-9);
    REQUIRE(r.max_relation < 1e-9);
    REQUIRE((Dense(triple_unitary(s.triple)) - triple_oracle(in)).norm() < 1e-9);
    worst = std::max(worst, r.residual());
    if (s.method == SolveMethod::Analytic) ++analytic;
  }
  INFO("analytic " << analytic << " / 1000, worst residual " << worst);
  CHECK(analytic >= 990);
}

TEST_CASE("solver outputs are canonical", "[ybe]") {
  for (int trial = 0; trial < 100; ++trial) {
    const YbeSolution s = solve(random_nondegenerate(YbeForm::Left));
    for (const auto& p : s.triple.g) {
      REQUIRE(p.gamma > -kPi);
      REQUIRE(p.gamma <= kPi);
      REQUIRE(p.delta > -kPi);
      REQUIRE(p.delta <= kPi);
    }
  }
}

TEST_CASE("singular inputs go through the numeric fallback", "[ybe]") {
  for (int trial = 0; trial < 100; ++trial) {
    YbeTriple in = random_triple(trial % 2 ? YbeForm::Right : YbeForm::Left);
    switch (trial % 4) {
      case 0: in.g[2].delta = -in.g[0].delta; break;              // sin(d1 + d3) = 0
      case 1: in.g[2].gamma = kPi / 2 - in.g[0].gamma; break;     // cos(g1 + g3) = 0
      case 2: in.g[2].gamma = -in.g[0].gamma; break;              // sin(g1 + g3) = 0
      default: in.g[2].delta = kPi / 2 - in.g[0].delta; break;    // cos(d1 + d3) = 0
    }
    const YbeSolution s = solve(in);
    CHECK(s.method == SolveMethod::NumericFallback);
    REQUIRE(verify_relations(in, s.triple).residual() < 1e-9);
  }
}

TEST_CASE("numeric fallback works without a warm start", "[ybe]") {
  for (int trial = 0; trial < 10; ++trial) {
    const YbeTriple in = random_nondegenerate(YbeForm::Left);
    const YbeSolution s = numeric_fallback(in);
    CHECK(s.method == SolveMethod::NumericFallback);
    REQUIRE(verify_relations(in, s.triple).residual() < 1e-9);
  }
}

TEST_CASE("fallback is deterministic", "[ybe]") {
  const YbeTriple in = random_nondegenerate(YbeForm::Left);
  const YbeSolution a = numeric_fallback(in);
  const YbeSolution b = numeric_fallback(in);
  CHECK(a.triple == b.triple);
}

TEST_CASE("round trip preserves the operator", "[ybe][property]") {
  for (int trial = 0; trial < 300; ++trial) {
    const YbeTriple in = random_nondegenerate(YbeForm::Left);
    const YbeSolution right = solve(in);
    const YbeSolution back = solve(right.triple);
    REQUIRE(back.triple.form == YbeForm::Left);
    REQUIRE((triple_unitary(back.triple) - triple_unitary(in)).norm() < 1e-8);
  }
}

TEST_CASE("relations vanish iff the operators agree", "[ybe][property]") {
  int solutions = 0, non_solutions = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const YbeTriple in = random_nondegenerate(YbeForm::Left);
    YbeTriple out = solve(in).triple;
    if (trial % 2) {
      const double eps = std::pow(10.0, -testing::uniform(1, 6));
      out.g[trial % 3].gamma += eps;
      out.g[(trial / 2) % 3].delta -= eps;
    }
    const RelationReport r = verify_relations(in, out);
    const bool relations_hold = r.max_relation < 1e-10;
    const bool matrices_agree = r.matrix_residual < 1e-8;
    REQUIRE(relations_hold == matrices_agree);
    (relations_hold ? solutions : non_solutions)++;
  }
  CHECK(solutions == 200);
  CHECK(non_solutions == 200);
}

TEST_CASE("verify_relations accepts either argument order", "[ybe]") {
  const YbeTriple in = random_nondegenerate(YbeForm::Right);
  const YbeTriple out = solve(in).triple;
  const RelationReport a = verify_relations(in, out);
  const RelationReport b = verify_relations(out, in);
  CHECK(a.relations == b.relations);
  REQUIRE_THROWS_AS(verify_relations(in, in), Error);
}

TEST_CASE("single-axis case reduces to four conditions", "[ybe][property]") {
  auto four_hold = [](const YbeTriple& l, const YbeTriple& r) {
    const double g1 = l.g[0].gamma, g2 = l.g[1].gamma, g3 = l.g[2].gamma;
    const double g4 = r.g[0].gamma, g5 = r.g[1].gamma, g6 = r.g[2].gamma;
    using std::cos;
    using std::sin;
    const double v[] = {
        sin(g2) * cos(g1 + g3) - cos(g5) * sin(g4 + g6),
        cos(g2) * cos(g1 + g3) - cos(g5) * cos(g4 + g6),
        sin(g2) * sin(g1 + g3) - sin(g5) * sin(g4 + g6),
        cos(g2) * sin(g1 + g3) - sin(g5) * cos(g4 + g6),
    };
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m < 1e-10;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const double g1 = testing::angle(), g2 = testing::angle(), g3 = testing::angle();
    const YbeTriple left{{RGateParams{g1, 0}, RGateParams{g2, 0}, RGateParams{g3, 0}},
                         YbeForm::Left};
    double g4, g5, g6;
    if (trial % 3 == 0) {
      // Any split of g2 with g5 = g1 + g3 solves the commuting case.
      g4 = testing::angle();
      g6 = g2 - g4;
      g5 = g1 + g3;
    } else if (trial % 3 == 1) {
      const YbeSolution s = solve(left);
      g4 = s.triple.g[0].gamma;
      g5 = s.triple.g[1].gamma;
      g6 = s.triple.g[2].gamma;
      CHECK(std::abs(s.triple.g[0].delta) < 1e-12);
      CHECK(std::abs(s.triple.g[1].delta) < 1e-12);
      CHECK(std::abs(s.triple.g[2].delta) < 1e-12);
    } else {
      g4 = testing::angle();
      g5 = testing::angle();
      g6 = testing::angle();
    }
    const YbeTriple right{{RGateParams{g4, 0}, RGateParams{g5, 0}, RGateParams{g6, 0}},
                          YbeForm::Right};
    const bool full = verify_relations(left, right).max_relation < 1e-10;
    REQUIRE(four_hold(left, right) == full);
    if (trial % 3 != 2) REQUIRE(full);
  }
}

TEST_CASE("unsolvable requests surface as errors", "[ybe]") {
  YbeTriple bad = random_triple(YbeForm::Left);
  bad.g[1].gamma = std::nan("");
  REQUIRE_THROWS_AS(solve(bad), Error);
}
