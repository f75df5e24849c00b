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

#include "ybc/ybe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "ybc/error.hpp"
#include "ybc/propagators.hpp"

namespace ybc {

namespace {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Gate on qubits (0,1) or (1,2) of a three-qubit register.
Matrix8 embed_upper(const Unitary4& r) {
  return Eigen::kroneckerProduct(r, Eigen::Matrix2cd::Identity());
}
Matrix8 embed_lower(const Unitary4& r) {
  return Eigen::kroneckerProduct(Eigen::Matrix2cd::Identity(), r);
}

// Position k (0..2) of a triple in `form` sits on the upper pair iff
// (form == Left) == (k != 1).
bool on_upper(YbeForm form, int k) { return (form == YbeForm::Left) == (k != 1); }

Matrix8 embed(YbeForm form, int k, const Unitary4& r) {
  return on_upper(form, k) ? embed_upper(r) : embed_lower(r);
}

std::array<RGateParams, 3> unpack(const Vec6& x) {
  return {RGateParams{x[0], x[1]}, RGateParams{x[2], x[3]}, RGateParams{x[4], x[5]}};
}

Vec6 pack(const std::array<RGateParams, 3>& g) {
  Vec6 x;
  x << g[0].gamma, g[0].delta, g[1].gamma, g[1].delta, g[2].gamma, g[2].delta;
  return x;
}

// The sixteen relations as lhs - rhs, for (g1, g2, g3) on the LEFT and
// (g4, g5, g6) on the RIGHT. Terms use full angles.
std::array<double, 16> relation_values(const std::array<RGateParams, 3>& l,
                                       const std::array<RGateParams, 3>& r) {
  const double g1 = l[0].gamma, d1 = l[0].delta, g2 = l[1].gamma, d2 = l[1].delta;
  const double g3 = l[2].gamma, d3 = l[2].delta;
  const double g4 = r[0].gamma, d4 = r[0].delta, g5 = r[1].gamma, d5 = r[1].delta;
  const double g6 = r[2].gamma, d6 = r[2].delta;
  using std::cos;
  using std::sin;
  const double sg2 = sin(g2), cg2 = cos(g2), sd2 = sin(d2), cd2 = cos(d2);
  const double cgm = cos(g1 - g3), cgp = cos(g1 + g3), sgm = sin(g1 - g3), sgp = sin(g1 + g3);
  const double cdm = cos(d1 - d3), cdp = cos(d1 + d3), sdm = sin(d1 - d3), sdp = sin(d1 + d3);
  const double sg5 = sin(g5), cg5 = cos(g5), sd5 = sin(d5), cd5 = cos(d5);
  const double sP = sin(g4 + g6), cP = cos(g4 + g6), sM = sin(g4 - g6), cM = cos(g4 - g6);
  const double sQ = sin(d4 + d6), cQ = cos(d4 + d6), sW = sin(d4 - d6), cW = cos(d4 - d6);
  return {
      sg2 * cgm * cdm * sd2 - cg5 * sP * sQ * cd5,
      cg2 * cgm * cdp * sd2 - cg5 * cP * sQ * cd5,
      -sg2 * cgp * sdm * cd2 - cg5 * sM * cQ * sd5,
      cg2 * cgp * sdp * cd2 - cg5 * cM * cQ * sd5,
      sg2 * cgp * cdm * cd2 - cg5 * sP * cQ * cd5,
      cg2 * cgp * cdp * cd2 - cg5 * cP * cQ * cd5,
      -sg2 * cgm * sdm * sd2 - cg5 * sM * sQ * sd5,
      cg2 * cgm * sdp * sd2 - cg5 * cM * sQ * sd5,
      sg2 * sgp * cdm * cd2 - sg5 * sP * cW * cd5,
      cg2 * sgp * cdp * cd2 - sg5 * cP * cW * cd5,
      sg2 * sgm * sdm * sd2 - sg5 * sM * sW * sd5,
      -cg2 * sgm * sdp * sd2 - sg5 * cM * sW * sd5,
      -sg2 * sgm * cdm * sd2 - sg5 * sP * sW * cd5,
      -cg2 * sgm * cdp * sd2 - sg5 * cP * sW * cd5,
      -sg2 * sgp * sdm * cd2 - sg5 * sM * cW * sd5,
      cg2 * sgp * sdp * cd2 - sg5 * cM * cW * sd5,
  };
}

double max_abs(const std::array<double, 16>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double l1_canonical(const std::array<RGateParams, 3>& g) {
  double s = 0.0;
  for (const auto& p : g) {
    s += std::abs(canonicalize_angle(p.gamma)) + std::abs(canonicalize_angle(p.delta));
  }
  return s;
}

// Shifting both outer gammas (or both outer deltas) by pi multiplies the
// operator by (-1)^2 and leaves every relation unchanged; keep the shift with
// the smaller canonical L1 norm.
void shortest_outer_pair(std::array<RGateParams, 3>& g) {
  auto cost = [](double a, double b) {
    return std::abs(canonicalize_angle(a)) + std::abs(canonicalize_angle(b));
  };
  if (cost(g[0].gamma + kPi, g[2].gamma + kPi) < cost(g[0].gamma, g[2].gamma)) {
    g[0].gamma += kPi;
    g[2].gamma += kPi;
  }
  if (cost(g[0].delta + kPi, g[2].delta + kPi) < cost(g[0].delta, g[2].delta)) {
    g[0].delta += kPi;
    g[2].delta += kPi;
  }
}

// Levenberg-Marquardt for one start. Returns the final point and f.
struct LmResult {
  Vec6 x;
  double f;
};

class Objective {
 public:
  Objective(const Matrix8& target, YbeForm out_form) : target_(target), form_(out_form) {
    Eigen::Matrix2cd x;
    x << 0.0, 1.0, 1.0, 0.0;
    xx_ = Eigen::kroneckerProduct(x, x);
    const Eigen::Matrix2cd z = Eigen::Vector2cd(1.0, -1.0).asDiagonal();
    zz_ = Eigen::kroneckerProduct(z, z);
  }

  double value(const Vec6& x) const {
    return (product(x) - target_).squaredNorm();
  }

  // Residual (real parts then imaginary parts) and its Jacobian.
  void linearize(const Vec6& x, Eigen::Matrix<double, 128, 1>& r,
                 Eigen::Matrix<double, 128, 6>& jac) const {
    std::array<Unitary4, 3> g;
    std::array<Matrix8, 3> e;
    for (int k = 0; k < 3; ++k) {
      g[k] = r_matrix({x[2 * k], x[2 * k + 1]});
      e[k] = embed(form_, k, g[k]);
    }
    const Matrix8 diff = e[0] * e[1] * e[2] - target_;
    flatten(diff, r);
    for (int k = 0; k < 3; ++k) {
      for (int c = 0; c < 2; ++c) {
        const Unitary4 dg = kI * (c == 0 ? xx_ : zz_) * g[k];
        Matrix8 d = embed(form_, k, dg);
        if (k == 0) d = d * e[1] * e[2];
        if (k == 1) d = e[0] * d * e[2];
        if (k == 2) d = e[0] * e[1] * d;
        Eigen::Matrix<double, 128, 1> col;
        flatten(d, col);
        jac.col(2 * k + c) = col;
      }
    }
  }

 private:
  Matrix8 product(const Vec6& x) const {
    Matrix8 m = embed(form_, 0, r_matrix({x[0], x[1]}));
    m = m * embed(form_, 1, r_matrix({x[2], x[3]}));
    return m * embed(form_, 2, r_matrix({x[4], x[5]}));
  }

  static void flatten(const Matrix8& m, Eigen::Matrix<double, 128, 1>& out) {
    for (int j = 0; j < 8; ++j) {
      for (int i = 0; i < 8; ++i) {
        out[8 * j + i] = m(i, j).real();
        out[64 + 8 * j + i] = m(i, j).imag();
      }
    }
  }

  Matrix8 target_;
  YbeForm form_;
  Unitary4 xx_;
  Unitary4 zz_;
};

LmResult levenberg_marquardt(const Objective& obj, Vec6 x) {
  Eigen::Matrix<double, 128, 1> r;
  Eigen::Matrix<double, 128, 6> jac;
  obj.linearize(x, r, jac);
  double f = r.squaredNorm();
  double lambda = 1e-3;
  for (int iter = 0; iter < 300 && f > 1e-28; ++iter) {
    const Mat6 h = jac.transpose() * jac;
    const Vec6 grad = jac.transpose() * r;
    Mat6 a = h;
    a.diagonal() += lambda * (h.diagonal().array() + 1e-12).matrix();
    const Vec6 step = -a.ldlt().solve(grad);
    if (!step.allFinite()) break;
    const Vec6 trial = x + step;
    const double f_trial = obj.value(trial);
    if (f_trial < f) {
      x = trial;
      obj.linearize(x, r, jac);
      const double improvement = f - f_trial;
      f = r.squaredNorm();
      lambda = std::max(lambda / 3.0, 1e-15);
      // Converged to rounding level.
      if (f < 1e-28 || (f < 1e-18 && improvement < 1e-3 * f)) break;
    } else {
      lambda *= 4.0;
      if (f < 1e-18 || lambda > 1e12) break;
    }
  }
  return {x, f};
}

YbeTriple canonical_triple(const std::array<RGateParams, 3>& g, YbeForm form) {
  YbeTriple t;
  t.form = form;
  for (int k = 0; k < 3; ++k) t.g[k] = canonicalize(g[k]);
  return t;
}

[[noreturn]] void unsolved(const YbeTriple& input, double best) {
  const auto& g = input.g;
  throw Error(ErrorCode::Unsolved,
              "Yang-Baxter move unsolved for " + std::string(to_string(input.form)) +
                  " triple ((" + std::to_string(g[0].gamma) + "," + std::to_string(g[0].delta) +
                  "),(" + std::to_string(g[1].gamma) + "," + std::to_string(g[1].delta) + "),(" +
                  std::to_string(g[2].gamma) + "," + std::to_string(g[2].delta) +
                  ")); best residual " + std::to_string(best));
}

}  // namespace

std::string_view to_string(YbeForm f) { return f == YbeForm::Left ? "LEFT" : "RIGHT"; }

std::string_view to_string(SolveMethod m) {
  return m == SolveMethod::Analytic ? "analytic" : "numeric-fallback";
}

Matrix8 triple_unitary(const YbeTriple& t) {
  Matrix8 m = embed(t.form, 0, r_matrix(t.g[0]));
  m = m * embed(t.form, 1, r_matrix(t.g[1]));
  return m * embed(t.form, 2, r_matrix(t.g[2]));
}

RelationReport verify_relations(const YbeTriple& a, const YbeTriple& b) {
  if (a.form == b.form) {
    throw Error(ErrorCode::InvalidArgument, "verify_relations needs one LEFT and one RIGHT triple");
  }
  const YbeTriple& left = a.form == YbeForm::Left ? a : b;
  const YbeTriple& right = a.form == YbeForm::Left ? b : a;
  RelationReport rep;
  rep.relations = relation_values(left.g, right.g);
  rep.max_relation = max_abs(rep.relations);
  rep.matrix_residual = (triple_unitary(left) - triple_unitary(right)).norm();
  return rep;
}

YbeSolution numeric_fallback(const YbeTriple& input, const YbeOptions& options,
                             const std::optional<YbeTriple>& warm_start) {
  const YbeForm out_form = opposite(input.form);
  const Objective obj(triple_unitary(input), out_form);

  std::vector<Vec6> starts;
  if (warm_start) starts.push_back(pack(warm_start->g));
  starts.push_back(Vec6::Zero());
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int s = 0; s < 7; ++s) {
    Vec6 x;
    for (int k = 0; k < 6; ++k) x[k] = angle(rng);
    starts.push_back(x);
  }

  double best = std::numeric_limits<double>::infinity();
  for (const auto& x0 : starts) {
    const LmResult lm = levenberg_marquardt(obj, x0);
    if (!(lm.f < 1e-18)) {
      best = std::min(best, std::sqrt(lm.f));
      continue;
    }
    const YbeTriple out = canonical_triple(unpack(lm.x), out_form);
    const double residual = verify_relations(input, out).residual();
    best = std::min(best, residual);
    if (residual < options.tol) return {out, residual, SolveMethod::NumericFallback};
  }
  unsolved(input, best);
}

YbeSolution solve(const YbeTriple& input, const YbeOptions& options) {
  for (const auto& p : input.g) {
    if (!is_finite(p)) throw Error(ErrorCode::InvalidArgument, "non-finite Yang-Baxter input");
  }
  // A RIGHT input is the mirror image (qubits 0 <-> 2) of a LEFT input with
  // the same parameters, and R is symmetric under the swap, so the same
  // closed form applies with the form tags exchanged.
  const YbeForm out_form = opposite(input.form);
  const double g1 = input.g[0].gamma, d1 = input.g[0].delta;
  const double g2 = input.g[1].gamma, d2 = input.g[1].delta;
  const double g3 = input.g[2].gamma, d3 = input.g[2].delta;
  using std::atan2;
  using std::cos;
  using std::sin;

  const double p0 = atan2(sin(g2) * cos(d1 - d3), cos(g2) * cos(d1 + d3));
  const double m0 = atan2(-sin(g2) * sin(d1 - d3), cos(g2) * sin(d1 + d3));
  const double q0 = atan2(sin(d2) * cos(g1 - g3), cos(d2) * cos(g1 + g3));
  const double w0 = atan2(-sin(d2) * sin(g1 - g3), cos(d2) * sin(g1 + g3));

  struct Candidate {
    std::array<RGateParams, 3> g;
    double rel;
    double l1;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(128);
  for (int mask = 0; mask < 16; ++mask) {
    const double p = p0 + ((mask & 1) ? kPi : 0.0);
    const double m = m0 + ((mask & 2) ? kPi : 0.0);
    const double q = q0 + ((mask & 4) ? kPi : 0.0);
    const double w = w0 + ((mask & 8) ? kPi : 0.0);
    const double g5_0 = atan2(sin(g1 + g3) * cos(q), cos(g1 + g3) * cos(w));
    for (int sigma = 1; sigma >= -1; sigma -= 2) {
      const double d5_0 = atan2(sigma * sin(d1 + d3) * cos(p), cos(d1 + d3) * cos(m));
      for (int k = 0; k < 4; ++k) {
        Candidate c;
        c.g = {RGateParams{(p + m) / 2.0, (q + w) / 2.0},
               RGateParams{g5_0 + ((k & 1) ? kPi : 0.0), d5_0 + ((k & 2) ? kPi : 0.0)},
               RGateParams{(p - m) / 2.0, (q - w) / 2.0}};
        shortest_outer_pair(c.g);
        c.rel = max_abs(relation_values(input.g, c.g));
        c.l1 = l1_canonical(c.g);
        candidates.push_back(c);
      }
    }
  }
  const double best_rel =
      std::min_element(candidates.begin(), candidates.end(),
                       [](const Candidate& a, const Candidate& b) { return a.rel < b.rel; })
          ->rel;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [best_rel](const Candidate& a, const Candidate& b) {
                     const bool ta = a.rel <= best_rel + 1e-12, tb = b.rel <= best_rel + 1e-12;
                     if (ta != tb) return ta;
                     if (ta) return a.l1 < b.l1;
                     return a.rel < b.rel;
                   });
  const Candidate& chosen = candidates.front();
  const YbeTriple warm = canonical_triple(chosen.g, out_form);

  const double out_gm = chosen.g[0].gamma - chosen.g[2].gamma;
  const double out_dm = chosen.g[0].delta - chosen.g[2].delta;
  const double denominators[] = {cos(d1 + d3), sin(d1 + d3), cos(g1 + g3),
                                 sin(g1 + g3), cos(out_dm),  cos(out_gm)};
  bool singular = false;
  for (double d : denominators) singular = singular || std::abs(d) < options.edge_tol;
  if (singular) return numeric_fallback(input, options, warm);

  for (const auto& c : candidates) {
    if (c.rel > best_rel + 1e-12) break;
    const YbeTriple out = canonical_triple(c.g, out_form);
    double residual = verify_relations(input, out).residual();
    if (residual >= options.tol) continue;
    if (residual > 1e-14) {
      // Polish toward rounding level so long rewrite chains stay accurate.
      const Objective obj(triple_unitary(input), out_form);
      const LmResult lm = levenberg_marquardt(obj, pack(out.g));
      const YbeTriple polished = canonical_triple(unpack(lm.x), out_form);
      const double r2 = verify_relations(input, polished).residual();
      if (r2 < residual) return {polished, r2, SolveMethod::Analytic};
    }
    return {out, residual, SolveMethod::Analytic};
  }
  return numeric_fallback(input, options, warm);
}

}  // namespace ybc
