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

#include "ybc/cli/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ybc/error.hpp"

namespace ybc::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, "config field '" + field + "' " + what);
}

double number(const json& obj, const char* key, const std::string& path, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) bad(path + key, "must be a number");
  return v.get<double>();
}

long long integer(const json& obj, const char* key, const std::string& path, long long fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) bad(path + key, "must be an integer");
  return v.get<long long>();
}

}  // namespace

JobConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("<root>", "must be a JSON object");

  static const char* const kKnown[] = {"J", "model", "spins", "t_final", "dt", "init", "noise"};
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) bad(key, "is not recognized");
  }

  JobConfig c;
  if (doc.contains("model")) {
    if (!doc["model"].is_string()) bad("model", "must be a string");
    try {
      c.model = parse_hamiltonian_class(doc["model"].get<std::string>());
    } catch (const Error& e) {
      bad("model", std::string("is invalid: ") + e.what());
    }
  }
  if (doc.contains("J")) {
    const json& j = doc["J"];
    if (!j.is_object()) bad("J", "must be an object with x, y, z");
    for (const auto& [key, value] : j.items()) {
      if (key != "x" && key != "y" && key != "z") bad("J." + key, "is not recognized");
    }
    c.j = CouplingParams{number(j, "x", "J.", 0.0), number(j, "y", "J.", 0.0),
                         number(j, "z", "J.", 0.0)};
  }
  const long long spins = integer(doc, "spins", "", c.spins);
  if (spins < 2 || spins > 24) bad("spins", "must be in [2, 24]");
  c.spins = static_cast<int>(spins);
  c.t_final = number(doc, "t_final", "", c.t_final);
  c.dt = number(doc, "dt", "", c.dt);
  if (doc.contains("init")) {
    if (!doc["init"].is_string()) bad("init", "must be a string");
    c.init = doc["init"].get<std::string>();
  }
  if (doc.contains("noise")) {
    const json& n = doc["noise"];
    if (!n.is_object()) bad("noise", "must be an object");
    for (const auto& [key, value] : n.items()) {
      if (key != "p1" && key != "p2" && key != "shots" && key != "seed") {
        bad("noise." + key, "is not recognized");
      }
    }
    NoiseModel m;
    m.p1 = number(n, "p1", "noise.", 0.0);
    m.p2 = number(n, "p2", "noise.", 0.0);
    const long long shots = integer(n, "shots", "noise.", 1024);
    if (shots < 1 || shots > 100000000) bad("noise.shots", "must be in [1, 1e8]");
    m.shots = static_cast<int>(shots);
    const long long seed = integer(n, "seed", "noise.", 0);
    if (seed < 0) bad("noise.seed", "must be non-negative");
    m.seed = static_cast<std::uint64_t>(seed);
    c.noise = m;
  }
  validate(c);
  return c;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void validate(const JobConfig& c) {
  if (!c.model && !c.j) bad("J", "is required (or give 'model')");
  if (c.spins < 2 || c.spins > 24) bad("spins", "must be in [2, 24]");
  try {
    validate(couplings(c));
    plan(c);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("config: ") + e.what());
  }
  if (c.init != "neel") {
    if (c.init.rfind("basis:", 0) != 0) bad("init", "must be 'neel' or 'basis:<bits>'");
    if (static_cast<int>(c.init.size()) - 6 != c.spins) {
      bad("init", "bitstring length must equal spins");
    }
  }
  initial_state(c);
  if (c.noise) c.noise->validate();
}

CouplingParams couplings(const JobConfig& c) {
  if (c.j) return *c.j;
  if (c.model) {
    const HamiltonianClass m = *c.model;
    return {has_x(m) ? 1.0 : 0.0, has_y(m) ? 1.0 : 0.0, has_z(m) ? 1.0 : 0.0};
  }
  return {};
}

TrotterPlan plan(const JobConfig& c) { return TrotterPlan::make(c.t_final, c.dt); }

StateVector initial_state(const JobConfig& c) {
  if (c.init == "neel") return neel_state(c.spins);
  return basis_state(std::string_view(c.init).substr(6));
}

}  // namespace ybc::cli
