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

#include <cmath>
#include <sstream>

#include "zermelo/error.hpp"
#include "zermelo/protocol.hpp"

namespace zermelo {

namespace {

constexpr double kPhaseAlignFloor = 1e-12;
constexpr double kOrthogonalityTolerance = 1e-10;
constexpr double kSineFloor = 1e-12;

// i·c·(|u⟩⟨v| − |v⟩⟨u|) for real c, assembled as X + X† so the result is
// Hermitian bit for bit.
HermitianOperator antisymmetric_pair(double c, const StateVector& u, const StateVector& v) {
  ComplexMatrix x = outer(u, v);
  x *= Complex(0.0, c);
  return HermitianOperator(x + x.adjoint());
}

}  // namespace

UnitaryOperator background_unitary(const ZermeloProblem& p, double t) {
  return unitary_exp(p.h0(), t, -1);
}

StateVector intermediate_final_state(const ZermeloProblem& p, double delta_t) {
  const SpectralExponential u0(p.h0());
  return StateVector::from_evolved(u0.apply(delta_t, +1, p.psi_f().amplitudes()));
}

StateVector align_phase(const StateVector& reference, const StateVector& v) {
  const Complex c = inner(reference, v);
  if (std::abs(c) < kPhaseAlignFloor) return v;
  return v.with_phase(-std::arg(c));
}

StateVector gram_schmidt_target(const ZermeloProblem& p, const StateVector& psi_f_prime) {
  if (psi_f_prime.dim() != p.dim()) throw DimensionError("gram_schmidt_target: dimension mismatch");
  const StateVector aligned = align_phase(p.psi_i(), psi_f_prime);
  const Complex c = inner(p.psi_i(), aligned);
  if (std::abs(c) >= 1.0 - 1e-12)
    throw DegenerateProblemError("gram_schmidt_target: target is parallel to the initial state");
  ComplexVector v = aligned.amplitudes();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * p.psi_i()[i];
  return StateVector::normalized(std::move(v));
}

HermitianOperator control_hamiltonian(const ZermeloProblem& p, const StateVector& psi_orthonormal) {
  if (psi_orthonormal.dim() != p.dim()) throw DimensionError("control_hamiltonian: dimension mismatch");
  const double overlap = std::abs(inner(p.psi_i(), psi_orthonormal));
  if (overlap > kOrthogonalityTolerance) {
    std::ostringstream os;
    os << "control_hamiltonian: target is not orthogonal to the initial state (|overlap| = " << overlap
       << ")";
    throw InvariantError(os.str(), overlap);
  }
  return antisymmetric_pair(p.speed(), psi_orthonormal, p.psi_i());
}

HermitianOperator control_hamiltonian_closed_form(const ZermeloProblem& p,
                                                  const StateVector& psi_f_prime, double delta_t) {
  const double a = p.speed();
  const double s = std::sin(a * delta_t);
  if (std::abs(s) <= kSineFloor)
    throw SingularConstructionError("control_hamiltonian_closed_form: sin(sqrt(k/2)·ΔT) vanishes");
  const StateVector aligned = align_phase(p.psi_i(), psi_f_prime);
  return antisymmetric_pair(a / s, aligned, p.psi_i());
}

UnitaryOperator control_unitary(const HermitianOperator& hc_initial, double t) {
  return unitary_exp(hc_initial, t, -1);
}

UnitaryOperator control_unitary_rotation(const StateVector& psi_i, const StateVector& psi_orthonormal,
                                         double k, double t) {
  const std::size_t n = psi_i.dim();
  if (psi_orthonormal.dim() != n) throw DimensionError("control_unitary_rotation: dimension mismatch");
  const double a = std::sqrt(k / 2.0);
  const Complex i(0.0, 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  // Eigenvectors (ψi ∓ iψ̄)/√2 of Hc(ti) with eigenvalues ∓a.
  ComplexVector lower(n), upper(n);
  for (std::size_t j = 0; j < n; ++j) {
    lower[j] = r * (psi_i[j] - i * psi_orthonormal[j]);
    upper[j] = r * (psi_i[j] + i * psi_orthonormal[j]);
  }
  ComplexMatrix u = ComplexMatrix::identity(n) - outer(psi_i, psi_i) - outer(psi_orthonormal, psi_orthonormal);
  u += outer(lower, lower) * std::polar(1.0, a * t);
  u += outer(upper, upper) * std::polar(1.0, -a * t);
  return UnitaryOperator(std::move(u));
}

UnitaryOperator full_unitary(const ZermeloProblem& p, const ZermeloSolution& sol, double t) {
  const double slack = 1e-12 * std::max(1.0, sol.delta_t);
  if (t < -slack || t > sol.delta_t + slack) {
    std::ostringstream os;
    os << "full_unitary: t = " << t << " outside [0, " << sol.delta_t << "]";
    throw Error(os.str());
  }
  return background_unitary(p, t) * control_unitary(sol.hc_initial, t);
}

ZermeloSolution solve(const ZermeloProblem& p, const SolverSettings& s) {
  const DeltaTSolution dt = solve_delta_t(p, s);
  StateVector psi_f_prime = intermediate_final_state(p, dt.delta_t);
  if (dt.method == SolveMethod::kDegenerate) {
    return {0.0, 0.0, std::move(psi_f_prime), std::nullopt, HermitianOperator::zero(p.dim()),
            dt.iterations, dt.residual, dt.method};
  }
  StateVector orthonormal = gram_schmidt_target(p, psi_f_prime);
  HermitianOperator hc = control_hamiltonian(p, orthonormal);
  return {dt.delta_t, dt.phi, std::move(psi_f_prime), std::move(orthonormal), std::move(hc),
          dt.iterations, dt.residual, dt.method};
}

}  // namespace zermelo
