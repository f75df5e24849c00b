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

#include "ybc/cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ybc/circuit.hpp"
#include "ybc/cli/config.hpp"
#include "ybc/compressor.hpp"
#include "ybc/error.hpp"
#include "ybc/native_circuit.hpp"
#include "ybc/qasm.hpp"
#include "ybc/simulator.hpp"

namespace ybc::cli {

namespace {

// Operator distances in compress stats are computed up to this size.
constexpr int kStatsDistanceQubits = 10;

struct Overrides {
  std::string config;
  std::optional<int> spins;
  std::optional<double> jx, jy, jz, t_final, dt, p1, p2;
  std::optional<int> shots;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> init, model;
};

void add_job_options(CLI::App* sub, Overrides& o) {
  sub->add_option("--config", o.config, "JSON job file");
  sub->add_option("--spins", o.spins, "chain length N");
  sub->add_option("--jx", o.jx, "XX coupling");
  sub->add_option("--jy", o.jy, "YY coupling");
  sub->add_option("--jz", o.jz, "ZZ coupling");
  sub->add_option("--model", o.model, "class with unit couplings (X, Y, Z, XY, XZ, YZ, XYZ)");
  sub->add_option("--t-final", o.t_final, "total evolution time");
  sub->add_option("--dt", o.dt, "Trotter step");
  sub->add_option("--init", o.init, "initial state: neel or basis:<bits>");
  sub->add_option("--p1", o.p1, "single-qubit depolarizing probability");
  sub->add_option("--p2", o.p2, "CX depolarizing probability");
  sub->add_option("--shots", o.shots, "Monte Carlo shots");
  sub->add_option("--seed", o.seed, "noise seed");
}

JobConfig resolve(const Overrides& o) {
  JobConfig c;
  if (!o.config.empty()) c = load_config(o.config);
  if (o.model) {
    c.model = parse_hamiltonian_class(*o.model);
    c.j.reset();
  }
  if (o.jx || o.jy || o.jz) {
    CouplingParams j = (c.j || c.model) ? couplings(c) : CouplingParams{};
    if (o.jx) j.jx = *o.jx;
    if (o.jy) j.jy = *o.jy;
    if (o.jz) j.jz = *o.jz;
    c.j = j;
  }
  if (o.spins) c.spins = *o.spins;
  if (o.t_final) c.t_final = *o.t_final;
  if (o.dt) c.dt = *o.dt;
  if (o.init) c.init = *o.init;
  if (o.p1 || o.p2 || o.shots) {
    NoiseModel n = c.noise.value_or(NoiseModel{0.0, 0.0, 1024, 0});
    if (o.p1) n.p1 = *o.p1;
    if (o.p2) n.p2 = *o.p2;
    if (o.shots) n.shots = *o.shots;
    c.noise = n;
  }
  if (o.seed && c.noise) c.noise->seed = *o.seed;
  validate(c);
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::InvalidArgument, "failed writing '" + path + "'");
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  const std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + suffix + p.extension().string())).string();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_evolve(const Overrides& o, const std::string& mode, const std::string& out_path,
               std::ostream& out) {
  const JobConfig c = resolve(o);
  std::vector<DynamicsMode> modes;
  if (mode == "all") {
    modes = {DynamicsMode::Exact, DynamicsMode::Trotter, DynamicsMode::Compressed};
  } else {
    modes = {parse_dynamics_mode(mode)};
  }
  const CouplingParams j = couplings(c);
  const TrotterPlan p = plan(c);
  const StateVector init = initial_state(c);
  const bool sections = out_path.empty() && (modes.size() > 1 || c.noise);

  auto emit = [&](const std::string& name, const std::string& suffix, const std::string& csv) {
    if (!out_path.empty()) {
      write_file(modes.size() > 1 || !suffix.empty()
                     ? with_suffix(out_path, (modes.size() > 1 ? "_" + name : "") + suffix)
                     : out_path,
                 csv);
    } else {
      if (sections) out << "# " << name << (suffix.empty() ? "" : " noisy") << "\n";
      out << csv;
    }
  };

  for (DynamicsMode m : modes) {
    const std::string name(to_string(m));
    std::ostringstream csv;
    write_csv(csv, run_dynamics(c.spins, j, p, m, init).series);
    emit(name, "", csv.str());
    if (c.noise && m != DynamicsMode::Exact) {
      std::ostringstream noisy;
      write_csv(noisy, run_noisy_dynamics(c.spins, j, p, m, *c.noise, init));
      emit(name, "_noisy", noisy.str());
    }
  }
  return 0;
}

int cmd_compress(const Overrides& o, const std::string& qasm_in, const std::string& qasm_out,
                 std::ostream& out, std::ostream& err) {
  Circuit input;
  if (!qasm_in.empty()) {
    if (!o.config.empty()) {
      throw Error(ErrorCode::InvalidArgument, "give either --qasm or --config, not both");
    }
    input = from_qasm(read_file(qasm_in));
  } else {
    const JobConfig c = resolve(o);
    input = build_trotter_circuit(c.spins, couplings(c), plan(c));
  }
  const CompressedBlock block = compress(input);
  const Circuit result = block.to_circuit();
  const std::string text = to_qasm(result);

  std::string stats = "{\"gates_before\":" + std::to_string(input.gate_count()) +
                      ",\"gates_after\":" + std::to_string(result.gate_count()) +
                      ",\"layers\":" + std::to_string(block.layer_count()) +
                      ",\"class\":\"" + std::string(to_string(block.hamiltonian_class())) +
                      "\",\"ybe_moves\":" + std::to_string(block.stats().ybe_moves) +
                      ",\"numeric_fallbacks\":" + std::to_string(block.stats().numeric_fallbacks) +
                      ",\"residual\":" + fmt(block.residual());
  if (input.num_qubits <= kStatsDistanceQubits) {
    stats += ",\"unitary_distance\":" + fmt(operator_distance(result, input));
  }
  stats += "}\n";

  if (qasm_out.empty()) {
    out << text;
    err << stats;
  } else {
    write_file(qasm_out, text);
    out << stats;
  }
  return 0;
}

int cmd_verify(const std::string& a_path, const std::string& b_path, double tol,
               std::ostream& out) {
  const QasmProgram a = parse_qasm(read_file(a_path));
  const QasmProgram b = parse_qasm(read_file(b_path));
  if (a.num_qubits != b.num_qubits) {
    throw Error(ErrorCode::DimensionMismatch,
                "circuits act on " + std::to_string(a.num_qubits) + " and " +
                    std::to_string(b.num_qubits) + " qubits");
  }
  if (a.num_qubits > kMaxDenseQubits) {
    throw Error(ErrorCode::SizeGuard,
                "verify supports at most " + std::to_string(kMaxDenseQubits) + " qubits");
  }
  const double d = operator_distance(a.num_qubits, compile(a.num_qubits, a.gates),
                                     compile(b.num_qubits, b.gates));
  const bool pass = d < tol;
  char buf[128];
  std::snprintf(buf, sizeof buf, "distance %.6e tol %.3e %s\n", d, tol, pass ? "PASS" : "FAIL");
  out << buf;
  return pass ? 0 : 1;
}

int cmd_emit(const Overrides& o, bool single_step, const std::string& qasm_out,
             std::ostream& out) {
  const JobConfig c = resolve(o);
  TrotterPlan p = plan(c);
  if (single_step) p.num_steps = 1;
  const std::string text = to_qasm(build_trotter_circuit(c.spins, couplings(c), p));
  if (qasm_out.empty()) {
    out << text;
  } else {
    write_file(qasm_out, text);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Yang-Baxter compression of Heisenberg-chain Trotter circuits", "ybc"};
  app.require_subcommand(1);

  Overrides evolve_o, compress_o, emit_o;
  std::string mode = "all", out_path, qasm_in, qasm_out;
  std::string verify_a, verify_b;
  double tol = 1e-7;
  bool single_step = false;

  CLI::App* evolve = app.add_subcommand("evolve", "write m_s(t) series as CSV");
  add_job_options(evolve, evolve_o);
  evolve->add_option("--mode", mode, "exact|trotter|compressed|all")
      ->check(CLI::IsMember({"exact", "trotter", "compressed", "all"}));
  evolve->add_option("--out", out_path, "CSV path (per-mode suffixes for --mode all)");

  CLI::App* compress_cmd = app.add_subcommand("compress", "compress a Trotter circuit");
  add_job_options(compress_cmd, compress_o);
  compress_cmd->add_option("--qasm", qasm_in, "input circuit instead of a config");
  compress_cmd->add_option("--qasm-out", qasm_out, "output QASM path");

  CLI::App* verify = app.add_subcommand("verify", "compare two QASM circuits up to phase");
  verify->add_option("a", verify_a, "first circuit")->required();
  verify->add_option("b", verify_b, "second circuit")->required();
  verify->add_option("--tol", tol, "distance threshold")->capture_default_str();

  CLI::App* emit = app.add_subcommand("emit", "write the Trotter circuit as QASM");
  add_job_options(emit, emit_o);
  emit->add_option("--qasm-out", qasm_out, "output QASM path");
  emit->add_flag("--single-step", single_step, "emit one Trotter step only");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (evolve->parsed()) return cmd_evolve(evolve_o, mode, out_path, out);
    if (compress_cmd->parsed()) return cmd_compress(compress_o, qasm_in, qasm_out, out, err);
    if (verify->parsed()) return cmd_verify(verify_a, verify_b, tol, out);
    if (emit->parsed()) return cmd_emit(emit_o, single_step, qasm_out, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ybc::cli
