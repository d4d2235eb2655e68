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

// Time-optimal navigation under a background Hamiltonian H0 with the control
// resource bound tr(Hc²) = k:
//
//   1. solve arccos|⟨ψi|U0†(ΔT)|ψf⟩| = sqrt(k/2)·ΔT for the least ΔT;
//   2. pull the target back, ψ'f = U0†(ΔT)ψf, and orthonormalize it against ψi;
//   3. Hc(ti) = i·sqrt(k/2)·(|ψ̄f⟩⟨ψi| − |ψi⟩⟨ψ̄f|), Uc(t) = exp(−i·Hc(ti)·t);
//   4. U(t) = U0(t)·Uc(t).
//
// All times are in natural units (ħ = 1). Only the principal arccos branch
// is used, so φ ∈ [0, π/2] and multi-revolution paths are never produced.

#include <optional>
#include <string_view>

#include "zermelo/linalg.hpp"

namespace zermelo {

class ZermeloProblem {
 public:
  /// Throws DimensionError on mismatched dimensions, Error when k <= 0.
  ZermeloProblem(HermitianOperator h0, StateVector psi_i, StateVector psi_f, double k);

  const HermitianOperator& h0() const noexcept { return h0_; }
  const StateVector& psi_i() const noexcept { return psi_i_; }
  const StateVector& psi_f() const noexcept { return psi_f_; }
  double k() const noexcept { return k_; }
  std::size_t dim() const noexcept { return h0_.dim(); }
  /// sqrt(k/2), the constant energy spread of the control.
  double speed() const noexcept;

  ZermeloProblem with_k(double k) const { return {h0_, psi_i_, psi_f_, k}; }

 private:
  HermitianOperator h0_;
  StateVector psi_i_;
  StateVector psi_f_;
  double k_;
};

struct SolverSettings {
  double tol = 1e-12;        ///< relative convergence on the residual
  int max_iter = 1000;       ///< fixed-point iteration cap
  double bracket_max = 4.0;  ///< fallback bracket, in units of π/sqrt(2k)

  void validate() const;
};

enum class SolveMethod { kDegenerate, kFixedPoint, kBisection };
std::string_view method_name(SolveMethod m);

struct DeltaTSolution {
  double delta_t;
  double phi;
  int iterations;
  double residual;
  SolveMethod method;
};

/// The scalar minimum-time equation for one problem, evaluated through a
/// single decomposition of H0.
class MinimumTimeEquation {
 public:
  explicit MinimumTimeEquation(const ZermeloProblem& p);

  /// ⟨ψi|U0†(t)|ψf⟩
  Complex overlap(double t) const;
  /// arccos|⟨ψi|U0†(t)|ψf⟩|, principal branch.
  double angle(double t) const;
  /// angle(t) − sqrt(k/2)·t
  double residual(double t) const { return angle(t) - speed_ * t; }
  double speed() const noexcept { return speed_; }
  /// Upper bound on |d residual/dt| away from the degenerate point.
  double rate_bound() const noexcept { return rate_bound_; }

 private:
  std::vector<double> energies_;
  ComplexVector weights_;
  double speed_;
  double rate_bound_;
};

/// Least non-negative ΔT. Fixed-point iteration ΔT ← φ(ΔT)/sqrt(k/2) first,
/// bracketed bisection on the residual if that stalls or lands past an
/// earlier root. Throws ConvergenceError if neither succeeds.
DeltaTSolution solve_delta_t(const ZermeloProblem& p, const SolverSettings& s = {});

struct ZermeloSolution {
  double delta_t;
  double phi;
  StateVector psi_f_prime;                       ///< U0†(ΔT)|ψf⟩
  std::optional<StateVector> psi_f_orthonormal;  ///< absent for the degenerate case
  HermitianOperator hc_initial;                  ///< Hc(ti)
  int iterations;
  double residual;
  SolveMethod method;

  bool degenerate() const noexcept { return !psi_f_orthonormal.has_value(); }
};

/// Runs all four steps. A target already on the initial ray yields ΔT = 0
/// and Hc = 0 without orthonormalization.
ZermeloSolution solve(const ZermeloProblem& p, const SolverSettings& s = {});

/// U0(t) = exp(−i·H0·t).
UnitaryOperator background_unitary(const ZermeloProblem& p, double t);

/// |ψ'f⟩ = U0†(ΔT)|ψf⟩.
StateVector intermediate_final_state(const ZermeloProblem& p, double delta_t);

/// Multiplies `v` by the global phase making ⟨reference|v⟩ real and
/// non-negative. Leaves `v` untouched when the overlap is below 1e-12.
StateVector align_phase(const StateVector& reference, const StateVector& v);

/// (I − |ψi⟩⟨ψi|)|ψ'f⟩ normalized, with the global phase of ψ'f chosen so
/// that ⟨ψi|ψ'f⟩ ≥ 0. That choice is what makes Uc(ΔT)|ψi⟩ land on ψ'f for
/// non-orthogonal pairs. Throws DegenerateProblemError for parallel states.
StateVector gram_schmidt_target(const ZermeloProblem& p, const StateVector& psi_f_prime);

/// Hc(ti) = i·sqrt(k/2)·(|ψ̄⟩⟨ψi| − |ψi⟩⟨ψ̄|). Requires ψ̄ ⊥ ψi to 1e-10.
HermitianOperator control_hamiltonian(const ZermeloProblem& p, const StateVector& psi_orthonormal);

/// Same operator from the pulled-back target directly:
/// i·sqrt(k/2)/sin(sqrt(k/2)·ΔT)·(|ψ'f⟩⟨ψi| − |ψi⟩⟨ψ'f|), using the same
/// phase choice for ψ'f. Throws SingularConstructionError when the sine
/// vanishes to 1e-12.
HermitianOperator control_hamiltonian_closed_form(const ZermeloProblem& p,
                                                  const StateVector& psi_f_prime, double delta_t);

/// Uc(t) = exp(−i·Hc(ti)·t).
UnitaryOperator control_unitary(const HermitianOperator& hc_initial, double t);

/// The same propagator assembled as a rotation in span{ψi, ψ̄} with the
/// identity on the complement.
UnitaryOperator control_unitary_rotation(const StateVector& psi_i, const StateVector& psi_orthonormal,
                                         double k, double t);

/// U(t) = U0(t)·Uc(t), 0 ≤ t ≤ ΔT.
UnitaryOperator full_unitary(const ZermeloProblem& p, const ZermeloSolution& sol, double t);

}  // namespace zermelo
