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

#include "ybc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ybc/error.hpp"

namespace ybc {

double phase_aligned_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "operators have different shapes");
  }
  const Complex overlap = (v.adjoint() * u).trace();
  Complex phase{1.0, 0.0};
  if (std::abs(overlap) > 1e-300) phase = overlap / std::abs(overlap);
  return (u - phase * v).norm();
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  const auto n = u.rows();
  return (u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).norm();
}

kernels::Mat4 to_kernel(const Unitary4& u) {
  kernels::Mat4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[4 * r + c] = u(r, c);
  return m;
}

kernels::Mat2 to_kernel(const Eigen::Matrix2cd& u) {
  return {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
}

double phase_aligned_distance(std::size_t dim, const ColumnMap& u, const ColumnMap& v) {
  std::vector<Complex> a(dim), b(dim);
  auto columns = [&](std::size_t k) {
    std::fill(a.begin(), a.end(), Complex{});
    std::fill(b.begin(), b.end(), Complex{});
    a[k] = b[k] = 1.0;
    u(a);
    v(b);
  };
  Complex trace = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    columns(k);
    for (std::size_t i = 0; i < dim; ++i) trace += std::conj(b[i]) * a[i];
  }
  const Complex phi = std::abs(trace) > 0.0 ? trace / std::abs(trace) : Complex{1.0};
  double sq = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    columns(k);
    for (std::size_t i = 0; i < dim; ++i) sq += std::norm(a[i] - phi * b[i]);
  }
  return std::sqrt(sq);
}

}  // namespace ybc
