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

#include "zermelo/dynamics.hpp"
#include "zermelo/error.hpp"
#include "zermelo/kernels.hpp"

namespace zermelo {

namespace {

constexpr double kOdeNormDrift = 1e-6;

void require_within_solution(const TimeGrid& grid, const ZermeloSolution& sol) {
  grid.validate();
  const double slack = 1e-12 * std::max(1.0, sol.delta_t);
  if (grid.t_start < -slack || grid.t_end > sol.delta_t + slack) {
    std::ostringstream os;
    os << "time grid [" << grid.t_start << ", " << grid.t_end << "] leaves [0, " << sol.delta_t << "]";
    throw Error(os.str());
  }
}

ComplexMatrix conjugate(const UnitaryOperator& u, const ComplexMatrix& m) {
  return u.matrix() * m * u.matrix().adjoint();
}

double variance(const ComplexMatrix& h, std::span<const Complex> psi) {
  const ComplexVector hp = h.apply(psi);
  const double second = std::real(inner(hp, hp));
  const double first = std::real(inner(psi, hp));
  return second - first * first;
}

TrajectorySample make_sample(double t, ComplexVector psi, ComplexVector psi_prime, HermitianOperator hc_t,
                             const ZermeloProblem& p, const ZermeloSolution& sol) {
  const double fid = std::norm(inner(p.psi_f().amplitudes(), psi));
  const double tr2 = std::real(trace_product(hc_t.matrix(), hc_t.matrix()));
  const double var = variance(sol.hc_initial.matrix(), psi_prime);
  const double nrm = norm(psi);
  return {t, std::move(psi), std::move(psi_prime), std::move(hc_t), fid, tr2, var, nrm};
}

// y + c·x
ComplexVector shifted(const ComplexVector& y, Complex c, const ComplexVector& x) {
  ComplexVector r = y;
  kernels::axpy(c, x, r);
  return r;
}

ComplexMatrix shifted(const ComplexMatrix& y, Complex c, const ComplexMatrix& x) {
  ComplexMatrix r = y;
  kernels::axpy(c, x.data(), r.data());
  return r;
}

struct OdeState {
  ComplexVector psi;
  ComplexMatrix hc;
};

struct OdeRate {
  ComplexVector dpsi;
  ComplexMatrix dhc;
};

OdeRate rate(const ComplexMatrix& h0, const OdeState& s) {
  const Complex minus_i(0.0, -1.0);
  ComplexVector hpsi = h0.apply(s.psi);
  kernels::axpy(1.0, s.hc.apply(s.psi), hpsi);
  for (Complex& z : hpsi) z *= minus_i;
  ComplexMatrix dhc = commutator(h0, s.hc);
  dhc *= minus_i;
  return {std::move(hpsi), std::move(dhc)};
}

OdeState advance(const OdeState& s, const OdeRate& r, double h) {
  return {shifted(s.psi, h, r.dpsi), shifted(s.hc, h, r.dhc)};
}

void rk4_step(const ComplexMatrix& h0, OdeState& s, double h) {
  const OdeRate k1 = rate(h0, s);
  const OdeRate k2 = rate(h0, advance(s, k1, 0.5 * h));
  const OdeRate k3 = rate(h0, advance(s, k2, 0.5 * h));
  const OdeRate k4 = rate(h0, advance(s, k3, h));
  const double w1 = h / 6.0, w2 = h / 3.0;
  kernels::axpy(w1, k1.dpsi, s.psi);
  kernels::axpy(w2, k2.dpsi, s.psi);
  kernels::axpy(w2, k3.dpsi, s.psi);
  kernels::axpy(w1, k4.dpsi, s.psi);
  kernels::axpy(w1, k1.dhc.data(), s.hc.data());
  kernels::axpy(w2, k2.dhc.data(), s.hc.data());
  kernels::axpy(w2, k3.dhc.data(), s.hc.data());
  kernels::axpy(w1, k4.dhc.data(), s.hc.data());
}

}  // namespace

void TimeGrid::validate() const {
  if (!(t_end > t_start)) throw Error("TimeGrid: t_end must exceed t_start");
  if (n_steps < 2) throw Error("TimeGrid: n_steps must be at least 2");
}

double TimeGrid::time(std::size_t j) const noexcept {
  if (j == static_cast<std::size_t>(n_steps)) return t_end;
  return t_start + step() * static_cast<double>(j);
}

TimeGrid TimeGrid::over(const ZermeloSolution& sol, int n_steps) { return {0.0, sol.delta_t, n_steps}; }

HermitianOperator control_hamiltonian_at(const HermitianOperator& h0, const HermitianOperator& hc_initial,
                                         double t) {
  return HermitianOperator::from_computed(conjugate(unitary_exp(h0, t, -1), hc_initial.matrix()));
}

std::vector<TrajectorySample> propagate_analytic(const ZermeloProblem& p, const ZermeloSolution& sol,
                                                 const TimeGrid& grid) {
  require_within_solution(grid, sol);
  const SpectralExponential u0(p.h0());
  const SpectralExponential uc(sol.hc_initial);
  std::vector<TrajectorySample> out;
  out.reserve(grid.points());
  for (std::size_t j = 0; j < grid.points(); ++j) {
    const double t = grid.time(j);
    ComplexVector psi_prime = uc.apply(t, -1, p.psi_i().amplitudes());
    const UnitaryOperator u0t = u0(t, -1);
    ComplexVector psi = u0t.matrix().apply(psi_prime);
    HermitianOperator hc_t = HermitianOperator::from_computed(conjugate(u0t, sol.hc_initial.matrix()));
    out.push_back(make_sample(t, std::move(psi), std::move(psi_prime), std::move(hc_t), p, sol));
  }
  return out;
}

std::vector<TrajectorySample> propagate_ode(const ZermeloProblem& p, const ZermeloSolution& sol,
                                            const TimeGrid& grid) {
  require_within_solution(grid, sol);
  const SpectralExponential u0(p.h0());
  const ComplexMatrix& h0 = p.h0().matrix();
  const double h = grid.step();

  // Start from the closed-form state at the grid's first time.
  const SpectralExponential uc(sol.hc_initial);
  OdeState s{u0.apply(grid.t_start, -1, uc.apply(grid.t_start, -1, p.psi_i().amplitudes())),
             control_hamiltonian_at(p.h0(), sol.hc_initial, grid.t_start).matrix()};
  std::vector<TrajectorySample> out;
  out.reserve(grid.points());
  for (std::size_t j = 0; j < grid.points(); ++j) {
    if (j > 0) rk4_step(h0, s, h);
    const double drift = std::abs(norm(s.psi) - 1.0);
    if (drift > kOdeNormDrift) {
      std::ostringstream os;
      os << "propagate_ode: norm drift " << drift << " after " << j << " steps; increase n_steps";
      throw StepCountError(os.str(), drift);
    }
    const double t = grid.time(j);
    ComplexVector psi_prime = u0.apply(t, +1, s.psi);
    out.push_back(make_sample(t, s.psi, std::move(psi_prime), HermitianOperator::from_computed(s.hc), p, sol));
  }
  return out;
}

double interaction_speed_squared(const ZermeloSolution& sol, const StateVector& psi_i, double t, double fd_step) {
  if (!(fd_step > 0.0)) throw Error("interaction_speed_squared: fd_step must be positive");
  const SpectralExponential uc(sol.hc_initial);
  ComplexVector d = uc.apply(t + fd_step, -1, psi_i.amplitudes());
  kernels::axpy(-1.0, uc.apply(t - fd_step, -1, psi_i.amplitudes()), d);
  const double n = norm(d) / (2.0 * fd_step);
  return n * n;
}

}  // namespace zermelo
