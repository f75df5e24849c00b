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

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

#include <Eigen/Dense>

#include "ybc/kernels/statevector.hpp"

namespace ybc {

using Complex = std::complex<double>;
using Unitary4 = Eigen::Matrix4cd;
/// Dense 2^N x 2^N operator, column-major.
using Unitary = Eigen::MatrixXcd;

/// min over unit-modulus phi of ||U - phi V||_F, with phi taken in closed form
/// as tr(V^dag U) / |tr(V^dag U)|.
double phase_aligned_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

/// Writes column k of an operator (the image of basis vector k) into `out`,
/// which arrives holding that basis vector.
using ColumnMap = std::function<void(std::span<Complex> out)>;

/// phase_aligned_distance for operators available only through their action
/// on basis vectors: one pass for the phase, one for the norm.
double phase_aligned_distance(std::size_t dim, const ColumnMap& u, const ColumnMap& v);

/// ||U U^dag - I||_F.
double unitarity_defect(const Eigen::MatrixXcd& u);

kernels::Mat4 to_kernel(const Unitary4& u);
kernels::Mat2 to_kernel(const Eigen::Matrix2cd& u);

}  // namespace ybc
