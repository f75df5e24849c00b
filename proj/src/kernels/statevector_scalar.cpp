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

#include "ybc/kernels/statevector.hpp"

namespace ybc::kernels::scalar {

namespace {

// Spreads k so that two zero bits are inserted at positions low_bit and
// low_bit + 1.
inline std::size_t insert_two_zero_bits(std::size_t k, unsigned low_bit) {
  const std::size_t low_mask = (std::size_t{1} << low_bit) - 1;
  return ((k & ~low_mask) << 2) | (k & low_mask);
}

inline std::size_t insert_zero_bit(std::size_t k, unsigned bit) {
  const std::size_t low_mask = (std::size_t{1} << bit) - 1;
  return ((k & ~low_mask) << 1) | (k & low_mask);
}

}  // namespace

void apply_pair(Complex* amps, std::size_t dim, unsigned low_bit, const Mat4& m) {
  const std::size_t lo = std::size_t{1} << low_bit;
  const std::size_t hi = lo << 1;
  const std::size_t groups = dim / 4;
  for (std::size_t k = 0; k < groups; ++k) {
    const std::size_t base = insert_two_zero_bits(k, low_bit);
    const std::size_t idx[4] = {base, base | lo, base | hi, base | hi | lo};
    const Complex v[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
    for (int r = 0; r < 4; ++r) {
      amps[idx[r]] = m[4 * r] * v[0] + m[4 * r + 1] * v[1] + m[4 * r + 2] * v[2] +
                     m[4 * r + 3] * v[3];
    }
  }
}

void apply_single(Complex* amps, std::size_t dim, unsigned bit, const Mat2& m) {
  const std::size_t stride = std::size_t{1} << bit;
  const std::size_t groups = dim / 2;
  for (std::size_t k = 0; k < groups; ++k) {
    const std::size_t i0 = insert_zero_bit(k, bit);
    const std::size_t i1 = i0 | stride;
    const Complex a = amps[i0];
    const Complex b = amps[i1];
    amps[i0] = m[0] * a + m[1] * b;
    amps[i1] = m[2] * a + m[3] * b;
  }
}

double norm_squared(const Complex* amps, std::size_t dim) {
  double sum = 0.0;
  for (std::size_t i = 0; i < dim; ++i) sum += std::norm(amps[i]);
  return sum;
}

}  // namespace ybc::kernels::scalar
