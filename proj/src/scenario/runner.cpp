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
#include <limits>

#include <json.hpp>

#include "zermelo/error.hpp"
#include "zermelo/scenario.hpp"

namespace zermelo::scenario {

namespace {

constexpr double kFinalFidelityTol = 1e-10;
constexpr double kAnalyticNormTol = 1e-10;
constexpr double kTraceSqTol = 1e-8;
constexpr double kTraceTol = 1e-10;
constexpr double kVarianceTol = 1e-8;
constexpr double kIsospectralTol = 1e-8;
constexpr double kCoadjointTol = 1e-8;
constexpr double kCoadjointStep = 1e-5;
constexpr double kOdeNormTol = 1e-6;
constexpr double kOracleTol = 1e-8;
constexpr double kFinslerTol = 1e-8;
constexpr double kFinslerGap = 1e-6;
constexpr double kPopulationSumTol = 1e-10;
constexpr double kEigenvalueDriftTol = 1e-8;

class Checks {
 public:
  explicit Checks(std::vector<InvariantResult>& out) : out_(out) {}
  void add(std::string name, double deviation, double threshold) {
    const bool pass = std::isfinite(deviation) && deviation <= threshold;
    out_.push_back({std::move(name), deviation, threshold, pass});
  }

 private:
  std::vector<InvariantResult>& out_;
};

double max_spectrum_diff(const EigenDecomposition& a, const EigenDecomposition& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
    d = std::max(d, std::abs(a.eigenvalues[i] - b.eigenvalues[i]));
  return d;
}

void core_invariants(const ZermeloProblem& p, const ZermeloSolution& sol, const std::vector<TrajectorySample>& traj,
                     int oracle_steps, Checks& checks) {
  const double k = p.k();
  double norm_dev = 0.0, tr2 = 0.0, tr1 = 0.0, var = 0.0;
  for (const TrajectorySample& s : traj) {
    norm_dev = std::max(norm_dev, std::abs(s.norm - 1.0));
    tr2 = std::max(tr2, std::abs(s.trace_hc_sq - k));
    tr1 = std::max(tr1, std::abs(s.hc_t.matrix().trace()));
    var = std::max(var, std::abs(s.variance_hc - 0.5 * k));
  }
  checks.add("final_fidelity", std::abs(1.0 - traj.back().fidelity_to_target), kFinalFidelityTol);
  checks.add("analytic_norm", norm_dev, kAnalyticNormTol);
  checks.add("trace_hc_sq", tr2, kTraceSqTol);
  checks.add("trace_hc", tr1, kTraceTol);
  checks.add("variance_hc", var, kVarianceTol);

  const EigenDecomposition e0 = hermitian_eigendecompose(sol.hc_initial);
  double iso = 0.0;
  constexpr int kIsoPoints = 10;
  for (int j = 0; j <= kIsoPoints; ++j) {
    const double t = sol.delta_t * j / kIsoPoints;
    iso = std::max(iso, max_spectrum_diff(e0, hermitian_eigendecompose(
                                                  control_hamiltonian_at(p.h0(), sol.hc_initial, t))));
  }
  checks.add("hc_isospectral", iso, kIsospectralTol);

  double coadj = 0.0;
  for (double f : {0.0, 0.5, 1.0})
    coadj = std::max(coadj, coadjoint_residual(p.h0(), sol.hc_initial, f * sol.delta_t, kCoadjointStep));
  checks.add("coadjoint_residual", coadj, kCoadjointTol);

  const TimeGrid oracle = TimeGrid::over(sol, oracle_steps);
  try {
    const std::vector<TrajectorySample> ode = propagate_ode(p, sol, oracle);
    const std::vector<TrajectorySample> ref = propagate_analytic(p, sol, oracle);
    double ode_norm = 0.0, pointwise = 0.0;
    for (std::size_t j = 0; j < ode.size(); ++j) {
      ode_norm = std::max(ode_norm, std::abs(ode[j].norm - 1.0));
      pointwise = std::max(pointwise, std::abs(ode[j].fidelity_to_target - ref[j].fidelity_to_target));
    }
    checks.add("ode_norm", ode_norm, kOdeNormTol);
    checks.add("oracle_fidelity_pointwise", pointwise, kOracleTol);
    checks.add("oracle_final_state", std::abs(1.0 - fidelity(ode.back().psi, ref.back().psi)), kOracleTol);
  } catch (const StepCountError& e) {
    checks.add("ode_norm", e.norm_drift(), kOdeNormTol);
  }
}

double quantization_deviation(const ResolvedScenario& rs, const models::QuantizationTable& table,
                              const SolverSettings& settings) {
  double worst = 0.0;
  for (const models::QuantizationRow& row : table.rows) {
    const ZermeloProblem q = rs.problem.with_k(row.k);
    const ZermeloSolution s = solve(q, settings);
    const double dev = rs.dimer ? models::non_zeeman_weight(models::pauli_decompose(s.hc_initial))
                                : models::oscillator_momentum_weight(s.hc_initial);
    worst = std::max(worst, dev);
  }
  return worst;
}

}  // namespace

bool RunReport::all_pass() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const InvariantResult& r) { return r.pass; });
}

RunReport run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& output_dir, const RunOptions& opts) {
  const ResolvedScenario rs = resolve(cfg);
  const ZermeloProblem& p = rs.problem;
  const ZermeloSolution sol = solve(p, cfg.solver);

  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + output_dir.string() + "': " + ec.message());

  RunReport r;
  r.preset = cfg.preset;
  r.dim = p.dim();
  r.k = p.k();
  r.eps_f = rs.eps_f;
  r.delta_t = sol.delta_t;
  if (rs.physical_units) r.delta_t_seconds = models::PhysicalUnits::seconds(sol.delta_t);
  r.phi = sol.phi;
  r.method = std::string(method_name(sol.method));
  r.iterations = sol.iterations;
  r.residual = sol.residual;
  r.degenerate = sol.degenerate();
  if (rs.eps_f) r.zeeman = models::zeeman_realizability(*rs.eps_f, p.k());
  Checks checks(r.invariants);

  if (cfg.wants(Output::kQuantizationTable) && rs.eps_f) {
    const models::QuantizationTable table = models::quantization_table(*rs.eps_f, cfg.quantization_n_max);
    emit_quantization_table(table, output_dir / "quantization.csv");
    r.files.push_back("quantization.csv");
    checks.add("quantization_zeeman", quantization_deviation(rs, table, cfg.solver), models::kZeemanTolerance);
  }

  if (sol.degenerate()) {
    r.notes.push_back("initial state already matches the target up to phase; no control needed");
  } else {
    const int n_steps = opts.steps_override.value_or(cfg.n_steps);
    const TimeGrid grid = TimeGrid::over(sol, n_steps);
    const std::vector<TrajectorySample> traj = propagate_analytic(p, sol, grid);

    if (cfg.wants(Output::kTrajectory)) {
      emit_trajectory_csv(traj, output_dir / "trajectory.csv");
      r.files.push_back("trajectory.csv");
    }
    if (cfg.wants(Output::kInvariants)) core_invariants(p, sol, traj, cfg.oracle_steps, checks);

    if (cfg.wants(Output::kAdiabaticity)) {
      AdiabaticityReport a = adiabaticity_report(p, sol, grid);
      emit_adiabaticity_csv(a, output_dir / "adiabaticity.csv");
      r.files.push_back("adiabaticity.csv");
      checks.add("eigenvalue_drift", a.eigenvalue_drift, kEigenvalueDriftTol);
      checks.add("population_sum", a.sum_rule_error, kPopulationSumTol);
      if (!a.flagged_samples.empty())
        r.notes.push_back(std::to_string(a.flagged_samples.size()) +
                          " adiabaticity samples had ambiguous branch matching");
      r.adiabaticity = std::move(a);
    }

    if (cfg.wants(Output::kFinslerCheck)) {
      const double gap = p.k() - std::real(trace_product(p.h0().matrix(), p.h0().matrix()));
      if (std::abs(gap) <= kFinslerGap) {
        r.notes.push_back("finsler check skipped: k is within 1e-6 of tr(H0^2)");
      } else {
        double worst = 0.0;
        for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
          try {
            const XOperator x = XOperator::along_trajectory(p, sol, f * sol.delta_t);
            worst = std::max(worst, std::abs(finsler_delta_t(x, p.h0(), p.k()) - sol.delta_t));
          } catch (const Error&) {
            worst = std::numeric_limits<double>::infinity();
          }
        }
        checks.add("finsler_delta_t", worst, kFinslerTol);
      }
    }
  }

  r.files.push_back("report.json");
  std::ofstream out(output_dir / "report.json", std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + (output_dir / "report.json").string() + "'");
  out << report_json(r);
  if (!out.flush()) throw IoError("write to report.json failed");
  return r;
}

std::string report_json(const RunReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["preset"] = r.preset;
  j["dim"] = r.dim;
  j["k"] = r.k;
  if (r.eps_f) j["eps_f"] = *r.eps_f;
  j["delta_t"] = r.delta_t;
  if (r.delta_t_seconds) {
    j["delta_t_seconds"] = *r.delta_t_seconds;
    j["delta_t_ps"] = *r.delta_t_seconds * 1e12;
  }
  j["phi"] = r.phi;
  j["method"] = r.method;
  j["iterations"] = r.iterations;
  j["residual"] = r.residual;
  j["degenerate"] = r.degenerate;
  if (r.zeeman)
    j["zeeman"] = {{"realizable", r.zeeman->realizable},
                   {"nearest_n", r.zeeman->nearest_n},
                   {"deviation", r.zeeman->deviation}};
  ordered_json inv = ordered_json::array();
  for (const InvariantResult& i : r.invariants) {
    ordered_json e;
    e["name"] = i.name;
    if (std::isfinite(i.max_deviation))
      e["max_deviation"] = i.max_deviation;
    else
      e["max_deviation"] = "inf";
    e["threshold"] = i.threshold;
    e["pass"] = i.pass;
    inv.push_back(std::move(e));
  }
  j["invariants"] = std::move(inv);
  j["all_pass"] = r.all_pass();
  if (r.adiabaticity) {
    const AdiabaticityReport& a = *r.adiabaticity;
    j["adiabaticity"] = {{"max_rate", a.max_rate},
                         {"eigenvalue_drift", a.eigenvalue_drift},
                         {"population_drift", a.population_drift},
                         {"sum_rule_error", a.sum_rule_error},
                         {"flagged_samples", a.flagged_samples.size()}};
  }
  j["notes"] = r.notes;
  j["files"] = r.files;
  return j.dump(2) + "\n";
}

}  // namespace zermelo::scenario
