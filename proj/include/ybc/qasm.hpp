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

// OpenQASM 2.0 subset: qreg, creg (ignored), barrier and the gates rx, rz, h,
// s, cx. Pair gates are emitted through their native circuits, separated by
// barriers on the pair so that the gate boundaries survive a round trip.

#include <string>
#include <string_view>
#include <vector>

#include "ybc/circuit.hpp"
#include "ybc/error.hpp"
#include "ybc/native_circuit.hpp"

namespace ybc {

class QasmError : public Error {
 public:
  QasmError(int line, int column, const std::string& message)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

std::string to_qasm(const NativeCircuit& c);
/// Lowers with ybc::lower and emits.
std::string to_qasm(const Circuit& c, double zero_tol = kDefaultZeroTol);

/// A parsed program: native gates with absolute qubit indices. `segments`
/// holds the gate index at which each barrier-delimited segment starts.
struct QasmProgram {
  int num_qubits = 0;
  std::vector<NativeGate> gates;
  std::vector<int> lines;  // source line of each gate
  std::vector<std::size_t> segments;
};

QasmProgram parse_qasm(std::string_view text);

/// Parses and regroups the native gates into pair gates: barrier segments
/// first, then maximal runs confined to one adjacent pair. Each group is
/// fitted to an XYZ propagator; groups that are not of that form are
/// rejected with a QasmError.
Circuit from_qasm(std::string_view text);

/// Fits exp(i (tx XX + ty YY + tz ZZ)) to a two-qubit unitary up to global
/// phase. Returns false when `u` is not of that form (off-diagonal Bell-basis
/// weight above `tol`).
bool fit_xyz(const Unitary4& u, Angles3& out, double tol = 1e-8);

}  // namespace ybc
