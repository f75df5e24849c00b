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

// Entry point of the `ybc` command-line tool.
//
//   ybc evolve   --config job.json [--mode exact|trotter|compressed|all] [--out series.csv]
//   ybc compress (--config job.json | --qasm circuit.qasm) [--qasm-out out.qasm]
//   ybc verify   a.qasm b.qasm [--tol 1e-7]
//   ybc emit     --config job.json [--qasm-out out.qasm] [--single-step]
//
// Exit status: 0 success (verify: PASS), 1 verify FAIL, 2 any error.

#include <iosfwd>
#include <string>
#include <vector>

namespace ybc::cli {

/// Runs the tool with `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ybc::cli
