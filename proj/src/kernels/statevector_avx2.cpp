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

// AVX2/FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after a runtime CPU check (see dispatch.cpp).

#include <immintrin.h>

#include "ybc/kernels/statevector.hpp"

namespace ybc::kernels::avx2 {

namespace {

inline std::size_t insert_two_zero_bits(std::size_t k, unsigned low_bit) {
  const std::size_t low_mask = (std::size_t{1} << low_bit) - 1;
  return ((k & ~low_mask) << 2) | (k & low_mask);
}

inline std::size_t insert_zero_bit(std::size_t k, unsigned bit) {
  const std::size_t low_mask = (std::size_t{1} << bit) - 1;
  return ((k & ~low_mask) << 1) | (k & low_mask);
}

// Broadcast real and imaginary parts of one matrix element.
struct Splat {
  __m256d re;
  __m256d im;
};

inline Splat splat(const Complex& c) {
  return {_mm256_set1_pd(c.real()), _mm256_set1_pd(c.imag())};
}

// acc + m * v for two interleaved complex numbers in v.
inline __m256d cmul_add(__m256d acc, const Splat& m, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  const __m256d cross = _mm256_mul_pd(m.im, swapped);
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(m.re, v, cross));
}

inline __m256d load2(const Complex* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(Complex* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

}  // namespace

void apply_pair(Complex* amps, std::size_t dim, unsigned low_bit, const Mat4& m) {
  // Two consecutive groups share a 256-bit lane only when the pair does not
  // occupy bit 0.
  if (low_bit == 0 || dim < 8) {
    scalar::apply_pair(amps, dim, low_bit, m);
    return;
  }
  Splat s[16];
  for (int i = 0; i < 16; ++i) s[i] = splat(m[i]);

  const std::size_t lo = std::size_t{1} << low_bit;
  const std::size_t hi = lo << 1;
  const std::size_t groups = dim / 4;
  for (std::size_t k = 0; k < groups; k += 2) {
    const std::size_t base = insert_two_zero_bits(k, low_bit);
    Complex* p0 = amps + base;
    Complex* p1 = amps + (base | lo);
    Complex* p2 = amps + (base | hi);
    Complex* p3 = amps + (base | hi | lo);
    const __m256d v0 = load2(p0);
    const __m256d v1 = load2(p1);
    const __m256d v2 = load2(p2);
    const __m256d v3 = load2(p3);
    __m256d out[4];
    for (int r = 0; r < 4; ++r) {
      __m256d acc = _mm256_setzero_pd();
      acc = cmul_add(acc, s[4 * r], v0);
      acc = cmul_add(acc, s[4 * r + 1], v1);
      acc = cmul_add(acc, s[4 * r + 2], v2);
      acc = cmul_add(acc, s[4 * r + 3], v3);
      out[r] = acc;
    }
    store2(p0, out[0]);
    store2(p1, out[1]);
    store2(p2, out[2]);
    store2(p3, out[3]);
  }
}

void apply_single(Complex* amps, std::size_t dim, unsigned bit, const Mat2& m) {
  if (bit == 0 || dim < 4) {
    scalar::apply_single(amps, dim, bit, m);
    return;
  }
  const Splat s00 = splat(m[0]), s01 = splat(m[1]), s10 = splat(m[2]), s11 = splat(m[3]);
  const std::size_t stride = std::size_t{1} << bit;
  const std::size_t groups = dim / 2;
  for (std::size_t k = 0; k < groups; k += 2) {
    const std::size_t i0 = insert_zero_bit(k, bit);
    Complex* p0 = amps + i0;
    Complex* p1 = amps + (i0 | stride);
    const __m256d a = load2(p0);
    const __m256d b = load2(p1);
    __m256d r0 = cmul_add(_mm256_setzero_pd(), s00, a);
    r0 = cmul_add(r0, s01, b);
    __m256d r1 = cmul_add(_mm256_setzero_pd(), s10, a);
    r1 = cmul_add(r1, s11, b);
    store2(p0, r0);
    store2(p1, r1);
  }
}

double norm_squared(const Complex* amps, std::size_t dim) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= dim; i += 4) {
    const __m256d a = load2(amps + i);
    const __m256d b = load2(amps + i + 2);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < dim; ++i) sum += std::norm(amps[i]);
  return sum;
}

}  // namespace ybc::kernels::avx2
