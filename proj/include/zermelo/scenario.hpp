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

#pragma once

// Declarative scenarios: a JSON config names a preset (or a custom problem),
// the runner solves it, propagates, checks invariants and writes CSV/JSON.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zermelo/dynamics.hpp"
#include "zermelo/models.hpp"
#include "zermelo/protocol.hpp"

namespace zermelo::scenario {

enum class Output { kTrajectory, kInvariants, kQuantizationTable, kAdiabaticity, kFinslerCheck };
std::string_view output_name(Output o);

/// k given either directly or as quantized(n) against the preset's ε_f.
struct KSpec {
  std::optional<double> value;
  std::optional<int> quantum;
};

struct ScenarioConfig {
  std::string preset;  ///< oscillator, bell-swap, spin-flip, cu-acetate or custom
  double omega = 1.0;
  models::DimerParams dimer{1.0, 0.5, 2.0};
  models::Bell flip_from = models::Bell::kPhiBarPlus;
  models::Bell flip_to = models::Bell::kPhiBarMinus;
  ComplexMatrix custom_h0{1};
  ComplexVector custom_psi_i;
  ComplexVector custom_psi_f;
  KSpec k;
  int n_steps = 1000;
  int oracle_steps = 10000;
  int quantization_n_max = 4;
  SolverSettings solver;
  std::vector<Output> outputs;

  bool wants(Output o) const;
};

/// Throws ConfigError with the offending field named.
ScenarioConfig parse_config(std::string_view json_text, std::string_view source = "<config>");
ScenarioConfig load_config(const std::filesystem::path& path);

/// A config turned into a problem plus what the preset knows about it.
struct ResolvedScenario {
  ZermeloProblem problem;
  std::optional<double> eps_f;
  bool dimer = false;
  bool physical_units = false;
};

ResolvedScenario resolve(const ScenarioConfig& cfg);

struct InvariantResult {
  std::string name;
  double max_deviation;
  double threshold;
  bool pass;
};

struct RunReport {
  std::string preset;
  std::size_t dim = 0;
  double k = 0.0;
  std::optional<double> eps_f;
  double delta_t = 0.0;
  std::optional<double> delta_t_seconds;
  double phi = 0.0;
  std::string method;
  int iterations = 0;
  double residual = 0.0;
  bool degenerate = false;
  std::vector<InvariantResult> invariants;
  std::optional<models::Realizability> zeeman;
  std::optional<AdiabaticityReport> adiabaticity;
  std::vector<std::string> notes;
  std::vector<std::string> files;

  bool all_pass() const;
};

struct RunOptions {
  std::optional<int> steps_override;
};

/// Solves, propagates and writes the requested outputs into output_dir.
RunReport run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& output_dir,
                       const RunOptions& opts = {});

std::string report_json(const RunReport& r);

struct TrajectoryRow {
  double t;
  double fidelity;
  double norm;
  double trace_hc_sq;
  double variance_hc;
  ComplexVector psi;
};

/// 17 significant digits, `\n` line endings. Throws IoError.
void emit_trajectory_csv(const std::vector<TrajectorySample>& samples, const std::filesystem::path& path);
std::vector<TrajectoryRow> read_trajectory_csv(const std::filesystem::path& path);
void emit_quantization_table(const models::QuantizationTable& table, const std::filesystem::path& path);
void emit_adiabaticity_csv(const AdiabaticityReport& report, const std::filesystem::path& path);

/// "%.17g"
std::string format_double(double v);

}  // namespace zermelo::scenario
