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

// Propagation along a solved navigation problem plus the diagnostics that
// check it: an independent RK4 integration of the Schrödinger equation
// coupled to the coadjoint law, Finsler-norm closure, and eigenbranch
// populations of the full Hamiltonian.

#include <cstddef>
#include <vector>

#include "zermelo/linalg.hpp"
#include "zermelo/protocol.hpp"

namespace zermelo {

/// Uniform grid t_j = t_start + j·(t_end − t_start)/n_steps, j = 0..n_steps.
struct TimeGrid {
  double t_start;
  double t_end;
  int n_steps;

  void validate() const;
  std::size_t points() const noexcept { return static_cast<std::size_t>(n_steps) + 1; }
  double step() const noexcept { return (t_end - t_start) / n_steps; }
  double time(std::size_t j) const noexcept;

  /// [0, ΔT] of a solved problem.
  static TimeGrid over(const ZermeloSolution& sol, int n_steps);
};

struct TrajectorySample {
  double t;
  ComplexVector psi;        ///< |ψ(t)⟩, full picture
  ComplexVector psi_prime;  ///< |ψ'(t)⟩ = U0†(t)|ψ(t)⟩
  HermitianOperator hc_t;   ///< Hc(t) = U0(t)·Hc(ti)·U0†(t)
  double fidelity_to_target;
  double trace_hc_sq;
  double variance_hc;  ///< ⟨ψ'|Hc(ti)²|ψ'⟩ − ⟨ψ'|Hc(ti)|ψ'⟩²
  double norm;
};

/// Closed-form trajectory U0(t)·Uc(t)|ψi⟩ sampled on the grid.
std::vector<TrajectorySample> propagate_analytic(const ZermeloProblem& p, const ZermeloSolution& sol,
                                                 const TimeGrid& grid);

/// Fixed-step classical RK4 on the pair (ψ, Hc):
///   i dψ/dt = (H0 + Hc)ψ,   dHc/dt = −i[H0, Hc],
/// one step per grid interval. No exponentials enter the integration, so it
/// serves as an independent check on propagate_analytic. Throws
/// StepCountError when ‖ψ‖ drifts from 1 by more than 1e-6.
std::vector<TrajectorySample> propagate_ode(const ZermeloProblem& p, const ZermeloSolution& sol,
                                            const TimeGrid& grid);

/// e^{−iH0t}·Hc(ti)·e^{iH0t}
HermitianOperator control_hamiltonian_at(const HermitianOperator& h0, const HermitianOperator& hc_initial,
                                         double t);

/// ‖[Hc(t+h) − Hc(t−h)]/(2h) + i[H0, Hc(t)]‖_F. Central difference, O(h²).
double coadjoint_residual(const HermitianOperator& h0, const HermitianOperator& hc_initial, double t,
                          double fd_step);

/// ‖d|ψ'(t)⟩/dt‖² by central difference on ψ'(t) = Uc(t)|ψi⟩.
double interaction_speed_squared(const ZermeloSolution& sol, const StateVector& psi_i, double t,
                                 double fd_step = 1e-6);

/// X(s) = i·(dU/ds)·U†. With s = t/ΔT this is ΔT·H(t).
class XOperator {
 public:
  /// Throws InvariantError unless Hermitian to 1e-8.
  explicit XOperator(ComplexMatrix m);
  static XOperator along_trajectory(const ZermeloProblem& p, const ZermeloSolution& sol, double t);

  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  ComplexMatrix m_;
};

/// [−tr(XH0) + sqrt(tr(XH0)² + (k − tr(H0²))·tr(X²))]/(k − tr(H0²)).
/// Throws SingularConstructionError when k = tr(H0²) to 1e-12 and Error
/// when the discriminant is negative.
double finsler_delta_t(const XOperator& x, const HermitianOperator& h0, double k);

struct AdiabaticityReport {
  std::vector<double> times;
  /// populations[branch][sample] = |⟨φ_branch(t)|ψ(t)⟩|²
  std::vector<std::vector<double>> populations;
  double max_rate;          ///< max |ΔP/Δt| over branches and grid intervals
  double eigenvalue_drift;  ///< max |h_branch(t) − h_branch(0)|
  double population_drift;  ///< max over branches of (max_t P − min_t P)
  double sum_rule_error;    ///< max |Σ P − 1|
  /// Grid indices where two candidate branch overlaps were within 1e-6;
  /// continuity is not guaranteed there.
  std::vector<std::size_t> flagged_samples;
};

/// Eigendecomposes H(t) = H0 + Hc(t) at every grid point, tracks branches by
/// greedy maximum eigenvector overlap, and records branch populations of the
/// analytic trajectory.
AdiabaticityReport adiabaticity_report(const ZermeloProblem& p, const ZermeloSolution& sol,
                                       const TimeGrid& grid);

}  // namespace zermelo
