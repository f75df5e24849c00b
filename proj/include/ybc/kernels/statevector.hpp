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

// Statevector kernels: dense application of one- and two-qubit gates to a
// complex amplitude array, plus the squared-norm reduction.
//
// Bit layout: qubit q of an N-qubit register lives at bit (N - 1 - q) of the
// basis index, so qubit 0 is the leftmost tensor factor. A two-qubit gate on
// the adjacent pair (i, i + 1) sees the local index 2 * b_i + b_{i+1}.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2/FMA variant. The public entry points dispatch at runtime to the best
// available backend; the YBC_KERNEL environment variable ("scalar" or "avx2")
// overrides the choice.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace ybc::kernels {

using Complex = std::complex<double>;
/// Row-major 2x2 matrix.
using Mat2 = std::array<Complex, 4>;
/// Row-major 4x4 matrix in the local basis |00>, |01>, |10>, |11>.
using Mat4 = std::array<Complex, 16>;

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);

bool backend_available(Backend b);
Backend active_backend();
/// Forces a backend for the rest of the process. Throws if unavailable.
void set_backend(Backend b);

void apply_pair(std::span<Complex> amps, int num_qubits, int pair, const Mat4& m);
void apply_single(std::span<Complex> amps, int num_qubits, int qubit, const Mat2& m);
double norm_squared(std::span<const Complex> amps);

// Backend-specific entry points. `low_bit` is the bit position of the second
// qubit of the pair (the pair occupies bits low_bit and low_bit + 1); `bit` is
// the bit position of the single target qubit. `dim` is the amplitude count.
namespace scalar {
void apply_pair(Complex* amps, std::size_t dim, unsigned low_bit, const Mat4& m);
void apply_single(Complex* amps, std::size_t dim, unsigned bit, const Mat2& m);
double norm_squared(const Complex* amps, std::size_t dim);
}  // namespace scalar

namespace avx2 {
void apply_pair(Complex* amps, std::size_t dim, unsigned low_bit, const Mat4& m);
void apply_single(Complex* amps, std::size_t dim, unsigned bit, const Mat2& m);
double norm_squared(const Complex* amps, std::size_t dim);
}  // namespace avx2

}  // namespace ybc::kernels
