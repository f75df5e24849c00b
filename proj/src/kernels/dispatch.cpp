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

#include <cstdlib>
#include <string>

#include "ybc/error.hpp"
#include "ybc/kernels/statevector.hpp"

namespace ybc::kernels {

#ifndef YBC_HAVE_AVX2
// Non-x86 builds link the scalar code under the avx2 names so the symbol set
// is stable; backend_available() keeps them unreachable.
namespace avx2 {
void apply_pair(Complex* amps, std::size_t dim, unsigned low_bit, const Mat4& m) {
  scalar::apply_pair(amps, dim, low_bit, m);
}
void apply_single(Complex* amps, std::size_t dim, unsigned bit, const Mat2& m) {
  scalar::apply_single(amps, dim, bit, m);
}
double norm_squared(const Complex* amps, std::size_t dim) {
  return scalar::norm_squared(amps, dim);
}
}  // namespace avx2
#endif

namespace {

struct KernelTable {
  Backend backend;
  void (*apply_pair)(Complex*, std::size_t, unsigned, const Mat4&);
  void (*apply_single)(Complex*, std::size_t, unsigned, const Mat2&);
  double (*norm_squared)(const Complex*, std::size_t);
};

constexpr KernelTable kScalarTable{Backend::Scalar, &scalar::apply_pair,
                                   &scalar::apply_single, &scalar::norm_squared};
constexpr KernelTable kAvx2Table{Backend::Avx2, &avx2::apply_pair, &avx2::apply_single,
                                 &avx2::norm_squared};

bool cpu_has_avx2() {
#if defined(YBC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* select_default() {
  if (const char* env = std::getenv("YBC_KERNEL")) {
    const std::string choice(env);
    if (choice == "scalar") return &kScalarTable;
    if (choice == "avx2" && cpu_has_avx2()) return &kAvx2Table;
  }
  return cpu_has_avx2() ? &kAvx2Table : &kScalarTable;
}

const KernelTable*& table() {
  static const KernelTable* active = select_default();
  return active;
}

void check_register(std::size_t size, int num_qubits) {
  if (num_qubits < 1 || num_qubits > 30 || size != (std::size_t{1} << num_qubits)) {
    throw Error(ErrorCode::DimensionMismatch,
                "amplitude count " + std::to_string(size) + " does not match " +
                    std::to_string(num_qubits) + " qubits");
  }
}

}  // namespace

std::string_view to_string(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) {
  return b == Backend::Scalar || cpu_has_avx2();
}

Backend active_backend() { return table()->backend; }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw Error(ErrorCode::InvalidArgument,
                "kernel backend " + std::string(to_string(b)) + " is not available");
  }
  table() = (b == Backend::Avx2) ? &kAvx2Table : &kScalarTable;
}

void apply_pair(std::span<Complex> amps, int num_qubits, int pair, const Mat4& m) {
  check_register(amps.size(), num_qubits);
  if (pair < 0 || pair > num_qubits - 2) {
    throw Error(ErrorCode::InvalidArgument,
                "pair index " + std::to_string(pair) + " out of range");
  }
  const auto low_bit = static_cast<unsigned>(num_qubits - 2 - pair);
  table()->apply_pair(amps.data(), amps.size(), low_bit, m);
}

void apply_single(std::span<Complex> amps, int num_qubits, int qubit, const Mat2& m) {
  check_register(amps.size(), num_qubits);
  if (qubit < 0 || qubit >= num_qubits) {
    throw Error(ErrorCode::InvalidArgument,
                "qubit index " + std::to_string(qubit) + " out of range");
  }
  const auto bit = static_cast<unsigned>(num_qubits - 1 - qubit);
  table()->apply_single(amps.data(), amps.size(), bit, m);
}

double norm_squared(std::span<const Complex> amps) {
  return table()->norm_squared(amps.data(), amps.size());
}

}  // namespace ybc::kernels
