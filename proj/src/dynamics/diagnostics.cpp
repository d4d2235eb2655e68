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
#include <sstream>

#include "zermelo/dynamics.hpp"
#include "zermelo/error.hpp"

namespace zermelo {

namespace {

constexpr double kXHermitianTolerance = 1e-8;
constexpr double kSingularDenominator = 1e-12;
constexpr double kTieTolerance = 1e-6;

}  // namespace

double coadjoint_residual(const HermitianOperator& h0, const HermitianOperator& hc_initial, double t,
                          double fd_step) {
  if (!(fd_step > 0.0)) throw Error("coadjoint_residual: fd_step must be positive");
  const SpectralExponential u0(h0);
  const ComplexMatrix& hc = hc_initial.matrix();
  auto at = [&](double s) {
    const ComplexMatrix u = u0(s, -1).matrix();
    return u * hc * u.adjoint();
  };
  ComplexMatrix d = at(t + fd_step) - at(t - fd_step);
  d *= Complex(1.0 / (2.0 * fd_step), 0.0);
  ComplexMatrix c = commutator(h0.matrix(), at(t));
  c *= Complex(0.0, 1.0);
  d += c;
  return d.frobenius_norm();
}

XOperator::XOperator(ComplexMatrix m) : m_(std::move(m)) {
  const double scale = std::max(1.0, m_.max_abs_entry());
  const double defect = m_.hermiticity_defect();
  if (defect > kXHermitianTolerance * scale) {
    std::ostringstream os;
    os << "XOperator: matrix is not Hermitian (defect " << defect << ")";
    throw InvariantError(os.str(), defect);
  }
}

XOperator XOperator::along_trajectory(const ZermeloProblem& p, const ZermeloSolution& sol, double t) {
  ComplexMatrix h = p.h0().matrix() + control_hamiltonian_at(p.h0(), sol.hc_initial, t).matrix();
  h *= Complex(sol.delta_t, 0.0);
  return XOperator(std::move(h));
}

double finsler_delta_t(const XOperator& x, const HermitianOperator& h0, double k) {
  if (x.matrix().dim() != h0.dim()) throw DimensionError("finsler_delta_t: X and H0 dimensions differ");
  const double a = std::real(trace_product(h0.matrix(), h0.matrix()));
  const double b = std::real(trace_product(x.matrix(), h0.matrix()));
  const double c = std::real(trace_product(x.matrix(), x.matrix()));
  const double d = k - a;
  if (std::abs(d) <= kSingularDenominator) {
    throw SingularConstructionError("finsler_delta_t: k equals tr(H0^2); denominator vanishes");
  }
  double disc = b * b + d * c;
  if (disc < 0.0) {
    // The discriminant is a perfect square on a solved trajectory; allow rounding.
    if (disc < -1e-12 * (b * b + std::abs(d) * c)) {
      std::ostringstream os;
      os << "finsler_delta_t: negative discriminant " << disc;
      throw Error(os.str());
    }
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  // (−b + root)/d rewritten as c/(b + root) to avoid cancellation when b > 0.
  if (b >= 0.0) return b + root > 0.0 ? c / (b + root) : 0.0;
  return (root - b) / d;
}

AdiabaticityReport adiabaticity_report(const ZermeloProblem& p, const ZermeloSolution& sol,
                                       const TimeGrid& grid) {
  const std::vector<TrajectorySample> traj = propagate_analytic(p, sol, grid);
  const std::size_t n = p.dim();
  const std::size_t m = traj.size();

  AdiabaticityReport r;
  r.times.resize(m);
  r.populations.assign(n, std::vector<double>(m, 0.0));
  r.max_rate = 0.0;
  r.eigenvalue_drift = 0.0;
  r.population_drift = 0.0;
  r.sum_rule_error = 0.0;

  std::vector<ComplexVector> prev_vecs(n);
  std::vector<double> initial_vals(n);

  for (std::size_t j = 0; j < m; ++j) {
    r.times[j] = traj[j].t;
    const EigenDecomposition eig =
        hermitian_eigendecompose(HermitianOperator::from_computed(p.h0().matrix() + traj[j].hc_t.matrix()));
    std::vector<ComplexVector> cols(n, ComplexVector(n));
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t i = 0; i < n; ++i) cols[c][i] = eig.eigenvectors(i, c);

    // assignment[branch] = column index at this grid point
    std::vector<std::size_t> assignment(n);
    if (j == 0) {
      for (std::size_t b = 0; b < n; ++b) assignment[b] = b;
    } else {
      std::vector<bool> used(n, false);
      bool tie = false;
      for (std::size_t b = 0; b < n; ++b) {
        double best = -1.0, second = -1.0;
        std::size_t best_c = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (used[c]) continue;
          const double ov = std::abs(inner(prev_vecs[b], cols[c]));
          if (ov > best) {
            second = best;
            best = ov;
            best_c = c;
          } else if (ov > second) {
            second = ov;
          }
        }
        if (second >= 0.0 && best - second < kTieTolerance) tie = true;
        used[best_c] = true;
        assignment[b] = best_c;
      }
      if (tie) r.flagged_samples.push_back(j);
    }

    double total = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = assignment[b];
      const double val = eig.eigenvalues[c];
      if (j == 0) initial_vals[b] = val;
      r.eigenvalue_drift = std::max(r.eigenvalue_drift, std::abs(val - initial_vals[b]));
      const double pop = std::norm(inner(cols[c], traj[j].psi));
      r.populations[b][j] = pop;
      total += pop;
      prev_vecs[b] = cols[c];
    }
    r.sum_rule_error = std::max(r.sum_rule_error, std::abs(total - 1.0));
  }

  for (std::size_t b = 0; b < n; ++b) {
    const auto& series = r.populations[b];
    const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
    r.population_drift = std::max(r.population_drift, *hi - *lo);
    for (std::size_t j = 1; j < m; ++j) {
      const double dt = r.times[j] - r.times[j - 1];
      r.max_rate = std::max(r.max_rate, std::abs(series[j] - series[j - 1]) / dt);
    }
  }
  return r;
}

}  // namespace zermelo
