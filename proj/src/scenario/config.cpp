// Copyright 2026 The Zermelo Authors
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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "zermelo/error.hpp"
#include "zermelo/scenario.hpp"

namespace zermelo::scenario {

namespace {

using nlohmann::json;

class Context {
 public:
  explicit Context(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(std::string_view field, std::string_view msg) const {
    std::ostringstream os;
    os << source_ << ": " << field << ": " << msg;
    throw ConfigError(os.str());
  }

  void allow_only(const json& obj, std::string_view field, std::initializer_list<std::string_view> keys) const {
    for (const auto& [key, _] : obj.items()) {
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        std::string path = field.empty() ? key : std::string(field) + "." + key;
        fail(path, "unknown key");
      }
    }
  }

  double number(const json& v, std::string_view field) const {
    if (!v.is_number()) fail(field, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(field, "must be finite");
    return d;
  }

  int integer(const json& v, std::string_view field) const {
    if (!v.is_number_integer()) fail(field, "expected an integer");
    return v.get<int>();
  }

  Complex complex(const json& v, std::string_view field) const {
    if (!v.is_array() || v.size() != 2) fail(field, "expected a [re, im] pair");
    return {number(v[0], field), number(v[1], field)};
  }

  ComplexVector vector(const json& v, std::string_view field) const {
    if (!v.is_array() || v.empty()) fail(field, "expected a non-empty array of [re, im] pairs");
    ComplexVector out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(complex(v[i], std::string(field) + "[" + std::to_string(i) + "]"));
    return out;
  }

 private:
  std::string source_;
};

constexpr std::string_view kPresets[] = {"oscillator", "bell-swap", "spin-flip", "cu-acetate", "custom"};

Output output_from_name(const Context& ctx, const std::string& name, std::string_view field) {
  for (Output o : {Output::kTrajectory, Output::kInvariants, Output::kQuantizationTable, Output::kAdiabaticity,
                   Output::kFinslerCheck})
    if (output_name(o) == name) return o;
  ctx.fail(field, "unknown output '" + name +
                      "' (expected trajectory, invariants, quantization-table, adiabaticity or finsler-check)");
}

KSpec parse_k(const Context& ctx, const json& v) {
  if (v.is_number()) {
    const double k = ctx.number(v, "k");
    if (!(k > 0.0)) ctx.fail("k", "must be positive");
    return {k, std::nullopt};
  }
  if (v.is_string()) {
    static const std::regex re(R"(\s*quantized\(\s*(\d+)\s*\)\s*)");
    std::smatch m;
    const std::string s = v.get<std::string>();
    if (std::regex_match(s, m, re)) return {std::nullopt, std::stoi(m[1].str())};
    ctx.fail("k", "expected a number or \"quantized(n)\", got \"" + s + "\"");
  }
  ctx.fail("k", "expected a number or \"quantized(n)\"");
}

}  // namespace

std::string_view output_name(Output o) {
  switch (o) {
    case Output::kTrajectory: return "trajectory";
    case Output::kInvariants: return "invariants";
    case Output::kQuantizationTable: return "quantization-table";
    case Output::kAdiabaticity: return "adiabaticity";
    case Output::kFinslerCheck: return "finsler-check";
  }
  return "?";
}

bool ScenarioConfig::wants(Output o) const { return std::find(outputs.begin(), outputs.end(), o) != outputs.end(); }

ScenarioConfig parse_config(std::string_view text, std::string_view source) {
  const Context ctx(source);
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    ctx.fail("document", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) ctx.fail("document", "expected a JSON object");
  ctx.allow_only(doc, "",
                 {"name", "description", "preset", "params", "h0", "psi_i", "psi_f", "k", "grid", "oracle_steps",
                  "quantization", "solver", "outputs"});

  ScenarioConfig cfg;
  if (!doc.contains("preset") || !doc["preset"].is_string()) ctx.fail("preset", "required string");
  cfg.preset = doc["preset"].get<std::string>();
  if (std::find(std::begin(kPresets), std::end(kPresets), cfg.preset) == std::end(kPresets))
    ctx.fail("preset", "unknown preset '" + cfg.preset +
                           "' (expected oscillator, bell-swap, spin-flip, cu-acetate or custom)");
  const bool custom = cfg.preset == "custom";

  for (const char* key : {"h0", "psi_i", "psi_f"}) {
    if (custom && !doc.contains(key)) ctx.fail(key, "required for the custom preset");
    if (!custom && doc.contains(key)) ctx.fail(key, "only allowed with preset \"custom\"");
  }

  if (doc.contains("params")) {
    const json& p = doc["params"];
    if (!p.is_object()) ctx.fail("params", "expected an object");
    if (cfg.preset == "oscillator") {
      ctx.allow_only(p, "params", {"omega"});
      if (p.contains("omega")) cfg.omega = ctx.number(p["omega"], "params.omega");
      if (!(cfg.omega > 0.0)) ctx.fail("params.omega", "must be positive");
    } else if (cfg.preset == "bell-swap" || cfg.preset == "spin-flip") {
      if (cfg.preset == "bell-swap")
        ctx.allow_only(p, "params", {"j_x", "j_y", "j_z"});
      else
        ctx.allow_only(p, "params", {"j_x", "j_y", "j_z", "from", "to"});
      if (p.contains("j_x")) cfg.dimer.j_x = ctx.number(p["j_x"], "params.j_x");
      if (p.contains("j_y")) cfg.dimer.j_y = ctx.number(p["j_y"], "params.j_y");
      if (p.contains("j_z")) cfg.dimer.j_z = ctx.number(p["j_z"], "params.j_z");
      for (const char* key : {"from", "to"}) {
        if (!p.contains(key)) continue;
        if (!p[key].is_string()) ctx.fail(std::string("params.") + key, "expected a Bell state name");
        try {
          (std::string_view(key) == "from" ? cfg.flip_from : cfg.flip_to) =
              models::bell_from_name(p[key].get<std::string>());
        } catch (const ConfigError& e) {
          ctx.fail(std::string("params.") + key, e.what());
        }
      }
      if (cfg.flip_from == cfg.flip_to) ctx.fail("params", "from and to must be distinct Bell states");
    } else {
      ctx.fail("params", "not accepted by preset '" + cfg.preset + "'");
    }
  }

  if (custom) {
    const json& rows = doc["h0"];
    if (!rows.is_array() || rows.empty()) ctx.fail("h0", "expected a non-empty array of rows");
    const std::size_t n = rows.size();
    std::vector<Complex> data;
    for (std::size_t i = 0; i < n; ++i) {
      ComplexVector row = ctx.vector(rows[i], "h0[" + std::to_string(i) + "]");
      if (row.size() != n) ctx.fail("h0[" + std::to_string(i) + "]", "row length differs from the row count");
      data.insert(data.end(), row.begin(), row.end());
    }
    cfg.custom_h0 = ComplexMatrix(n, std::move(data));
    const double defect = cfg.custom_h0.hermiticity_defect();
    if (defect > kHermitianTolerance) {
      std::ostringstream os;
      os << "not Hermitian (max |H - H^dagger| = " << defect << ")";
      ctx.fail("h0", os.str());
    }
    cfg.custom_psi_i = ctx.vector(doc["psi_i"], "psi_i");
    cfg.custom_psi_f = ctx.vector(doc["psi_f"], "psi_f");
    for (const auto& [field, v] : {std::pair{"psi_i", &cfg.custom_psi_i}, std::pair{"psi_f", &cfg.custom_psi_f}}) {
      if (v->size() != n) ctx.fail(field, "length differs from the dimension of h0");
      const double nrm = norm(*v);
      if (std::abs(nrm - 1.0) > kNormTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "not normalized (norm = " << nrm << ")";
        ctx.fail(field, os.str());
      }
    }
  }

  if (!doc.contains("k")) ctx.fail("k", "required (a number or \"quantized(n)\")");
  cfg.k = parse_k(ctx, doc["k"]);
  if (custom && cfg.k.quantum) ctx.fail("k", "quantized(n) needs a preset that defines eps_f");

  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    if (!g.is_object()) ctx.fail("grid", "expected an object");
    ctx.allow_only(g, "grid", {"n_steps"});
    if (g.contains("n_steps")) cfg.n_steps = ctx.integer(g["n_steps"], "grid.n_steps");
  }
  if (cfg.n_steps < 2) ctx.fail("grid.n_steps", "must be at least 2");
  if (doc.contains("oracle_steps")) cfg.oracle_steps = ctx.integer(doc["oracle_steps"], "oracle_steps");
  if (cfg.oracle_steps < 2) ctx.fail("oracle_steps", "must be at least 2");

  if (doc.contains("quantization")) {
    const json& q = doc["quantization"];
    if (!q.is_object()) ctx.fail("quantization", "expected an object");
    ctx.allow_only(q, "quantization", {"n_max"});
    if (q.contains("n_max")) cfg.quantization_n_max = ctx.integer(q["n_max"], "quantization.n_max");
    if (cfg.quantization_n_max < 0) ctx.fail("quantization.n_max", "must be non-negative");
  }

  if (doc.contains("solver")) {
    const json& s = doc["solver"];
    if (!s.is_object()) ctx.fail("solver", "expected an object");
    ctx.allow_only(s, "solver", {"tol", "max_iter", "bracket_max"});
    if (s.contains("tol")) cfg.solver.tol = ctx.number(s["tol"], "solver.tol");
    if (s.contains("max_iter")) cfg.solver.max_iter = ctx.integer(s["max_iter"], "solver.max_iter");
    if (s.contains("bracket_max")) cfg.solver.bracket_max = ctx.number(s["bracket_max"], "solver.bracket_max");
    try {
      cfg.solver.validate();
    } catch (const Error& e) {
      ctx.fail("solver", e.what());
    }
  }

  if (doc.contains("outputs")) {
    const json& o = doc["outputs"];
    if (!o.is_array()) ctx.fail("outputs", "expected an array of names");
    for (std::size_t i = 0; i < o.size(); ++i) {
      const std::string field = "outputs[" + std::to_string(i) + "]";
      if (!o[i].is_string()) ctx.fail(field, "expected a string");
      const Output out = output_from_name(ctx, o[i].get<std::string>(), field);
      if (!cfg.wants(out)) cfg.outputs.push_back(out);
    }
  } else {
    cfg.outputs = {Output::kTrajectory, Output::kInvariants, Output::kAdiabaticity, Output::kFinslerCheck};
    if (!custom) cfg.outputs.insert(cfg.outputs.begin() + 2, Output::kQuantizationTable);
  }
  if (cfg.wants(Output::kQuantizationTable) && custom)
    ctx.fail("outputs", "quantization-table needs a preset that defines eps_f");
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

ResolvedScenario resolve(const ScenarioConfig& cfg) {
  std::optional<double> eps_f;
  bool dimer = false, units = false;
  if (cfg.preset == "oscillator") {
    eps_f = models::OscillatorPreset(cfg.omega).eps_f;
  } else if (cfg.preset == "bell-swap") {
    eps_f = models::bell_swap_eps_f(cfg.dimer);
    dimer = true;
  } else if (cfg.preset == "spin-flip") {
    eps_f = models::bell_energy(cfg.dimer, cfg.flip_to);
    dimer = true;
  } else if (cfg.preset == "cu-acetate") {
    eps_f = models::bell_swap_eps_f(models::cu_acetate_preset().params);
    dimer = true;
    units = true;
  }

  double k;
  if (cfg.k.value) {
    k = *cfg.k.value;
  } else {
    if (!eps_f) throw ConfigError("k: quantized(n) needs a preset that defines eps_f");
    try {
      k = models::quantized_k(*eps_f, *cfg.k.quantum);
    } catch (const Error& e) {
      throw ConfigError(std::string("k: ") + e.what());
    }
  }

  auto make = [&]() -> ZermeloProblem {
    if (cfg.preset == "oscillator") return models::oscillator_problem(cfg.omega, k);
    if (cfg.preset == "bell-swap") return models::bell_swap_problem(cfg.dimer, k);
    if (cfg.preset == "spin-flip") return models::spin_flip_problem(cfg.dimer, cfg.flip_from, cfg.flip_to, k);
    if (cfg.preset == "cu-acetate") return models::bell_swap_problem(models::cu_acetate_preset().params, k);
    return ZermeloProblem(HermitianOperator(cfg.custom_h0), StateVector(cfg.custom_psi_i),
                          StateVector(cfg.custom_psi_f), k);
  };
  return {make(), eps_f, dimer, units};
}

}  // namespace zermelo::scenario
