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

// Parameter equations of the Yang-Baxter move for R(gamma, delta) gates on
// three qubits:
//
//   LEFT  = (R1 (x) 1)(1 (x) R2)(R3 (x) 1)
//   RIGHT = (1 (x) R4)(R5 (x) 1)(1 (x) R6)
//
// Gates are listed in matrix-product order, so the last one acts first in
// time.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "ybc/angles.hpp"

namespace ybc {

enum class YbeForm { Left, Right };

std::string_view to_string(YbeForm f);
inline YbeForm opposite(YbeForm f) { return f == YbeForm::Left ? YbeForm::Right : YbeForm::Left; }

struct YbeTriple {
  std::array<RGateParams, 3> g{};
  YbeForm form = YbeForm::Left;

  friend bool operator==(const YbeTriple&, const YbeTriple&) = default;
};

using Matrix8 = Eigen::Matrix<std::complex<double>, 8, 8>;

/// 8x8 operator of a triple in its form.
Matrix8 triple_unitary(const YbeTriple& t);

struct RelationReport {
  /// Signed violations of the sixteen scalar relations (lhs - rhs).
  std::array<double, 16> relations{};
  double max_relation = 0.0;
  /// ||LEFT - RIGHT||_F, no phase freedom.
  double matrix_residual = 0.0;

  double residual() const { return std::max(max_relation, matrix_residual); }
};

/// Evaluates the sixteen relations and the direct 8x8 comparison for a LEFT
/// triple (g1, g2, g3) against a RIGHT triple (g4, g5, g6). Both arguments
/// are reordered by form, so either may be passed first.
RelationReport verify_relations(const YbeTriple& a, const YbeTriple& b);

enum class SolveMethod { Analytic, NumericFallback };

std::string_view to_string(SolveMethod m);

struct YbeSolution {
  YbeTriple triple;  // opposite form of the input
  double residual = 0.0;
  SolveMethod method = SolveMethod::Analytic;
};

struct YbeOptions {
  /// Below this magnitude a closed-form denominator counts as singular.
  double edge_tol = 1e-6;
  /// Acceptance bound on RelationReport::residual().
  double tol = 1e-9;
  /// Seed of the fallback multistart points.
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Solves for the opposite-form triple. Closed form via atan2 with branch
/// selection over the sixteen relations; falls back to numeric_fallback near
/// singular denominators. Throws Error(Unsolved) with the best residual when
/// nothing meets options.tol. Outputs are canonicalized to (-pi, pi].
YbeSolution solve(const YbeTriple& input, const YbeOptions& options = {});

/// Levenberg-Marquardt on ||LHS - RHS||_F^2 over the six output angles with
/// a deterministic multistart (optional warm start, zero, then seven seeded
/// points). Accepts at f < 1e-18 and residual < options.tol.
YbeSolution numeric_fallback(const YbeTriple& input, const YbeOptions& options = {},
                             const std::optional<YbeTriple>& warm_start = std::nullopt);

}  // namespace ybc
