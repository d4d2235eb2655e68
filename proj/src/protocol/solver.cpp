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
#include <numbers>
#include <sstream>

#include "zermelo/error.hpp"
#include "zermelo/protocol.hpp"

namespace zermelo {

namespace {

constexpr double kDegenerateOverlap = 1.0 - 1e-12;

struct Bracket {
  double lo;
  double hi;
};

// First sub-interval of [0, t_end] on which the residual turns non-positive.
std::optional<Bracket> first_sign_change(const MinimumTimeEquation& eq, double t_end) {
  const double span = eq.rate_bound() * t_end / 0.02;
  const auto n = static_cast<long>(std::clamp(std::ceil(span), 256.0, 1e6));
  const double h = t_end / static_cast<double>(n);
  double prev = 0.0;
  for (long i = 1; i <= n; ++i) {
    const double t = (i == n) ? t_end : h * static_cast<double>(i);
    if (eq.residual(t) <= 0.0) return Bracket{prev, t};
    prev = t;
  }
  return std::nullopt;
}

struct Root {
  double t;
  double residual;
  int iterations;
};

Root bisect(const MinimumTimeEquation& eq, Bracket b) {
  double lo = b.lo, hi = b.hi;
  int it = 0;
  for (; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eq.residual(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double rlo = eq.residual(lo), rhi = eq.residual(hi);
  return std::abs(rlo) <= std::abs(rhi) ? Root{lo, rlo, it} : Root{hi, rhi, it};
}

bool converged(double residual, double t, double tol) {
  return std::abs(residual) < tol * std::max(t, 1.0);
}

}  // namespace

std::string_view method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::kDegenerate: return "degenerate";
    case SolveMethod::kFixedPoint: return "fixed-point";
    case SolveMethod::kBisection: return "bisection";
  }
  return "unknown";
}

void SolverSettings::validate() const {
  if (!(tol > 0.0)) throw Error("SolverSettings: tol must be positive");
  if (max_iter < 1) throw Error("SolverSettings: max_iter must be at least 1");
  if (!(bracket_max >= 1.0)) throw Error("SolverSettings: bracket_max must be at least 1");
}

ZermeloProblem::ZermeloProblem(HermitianOperator h0, StateVector psi_i, StateVector psi_f, double k)
    : h0_(std::move(h0)), psi_i_(std::move(psi_i)), psi_f_(std::move(psi_f)), k_(k) {
  if (psi_i_.dim() != h0_.dim() || psi_f_.dim() != h0_.dim())
    throw DimensionError("ZermeloProblem: H0 and states must share one dimension");
  if (!(k_ > 0.0) || !std::isfinite(k_)) throw Error("ZermeloProblem: k must be a positive finite number");
}

double ZermeloProblem::speed() const noexcept { return std::sqrt(k_ / 2.0); }

MinimumTimeEquation::MinimumTimeEquation(const ZermeloProblem& p) : speed_(p.speed()) {
  const EigenDecomposition eig = hermitian_eigendecompose(p.h0());
  const ComplexMatrix& v = eig.eigenvectors.matrix();
  const std::size_t n = p.dim();
  energies_ = eig.eigenvalues;
  weights_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex vi = 0.0, vf = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      vi += std::conj(v(r, j)) * p.psi_i()[r];
      vf += std::conj(v(r, j)) * p.psi_f()[r];
    }
    weights_[j] = std::conj(vi) * vf;
  }
  rate_bound_ = (energies_.back() - energies_.front()) + speed_;
}

Complex MinimumTimeEquation::overlap(double t) const {
  Complex s = 0.0;
  for (std::size_t j = 0; j < energies_.size(); ++j) s += weights_[j] * std::polar(1.0, energies_[j] * t);
  return s;
}

double MinimumTimeEquation::angle(double t) const {
  return std::acos(std::min(1.0, std::abs(overlap(t))));
}

DeltaTSolution solve_delta_t(const ZermeloProblem& p, const SolverSettings& s) {
  s.validate();
  const MinimumTimeEquation eq(p);
  const double a = eq.speed();

  if (std::abs(eq.overlap(0.0)) >= kDegenerateOverlap)
    return {0.0, 0.0, 0, eq.residual(0.0), SolveMethod::kDegenerate};

  // Fixed point: the residual at t_n equals a·(t_{n+1} − t_n).
  double t = eq.angle(0.0) / a;
  double r = eq.residual(t);
  int it = 0;
  bool fp_ok = converged(r, t, s.tol);
  while (!fp_ok && it < s.max_iter) {
    t = eq.angle(t) / a;
    r = eq.residual(t);
    ++it;
    fp_ok = converged(r, t, s.tol) && std::isfinite(t);
  }

  if (fp_ok) {
    // The iterate may have skipped an earlier crossing; least time wins.
    const auto earlier = first_sign_change(eq, t * (1.0 - 1e-6));
    if (!earlier) return {t, a * t, it, r, SolveMethod::kFixedPoint};
    const Root root = bisect(eq, *earlier);
    if (converged(root.residual, root.t, s.tol))
      return {root.t, a * root.t, it + root.iterations, root.residual, SolveMethod::kBisection};
  }

  const double t_max = s.bracket_max * std::numbers::pi / std::sqrt(2.0 * p.k());
  const auto bracket = first_sign_change(eq, t_max);
  if (!bracket) {
    std::ostringstream os;
    os << "solve_delta_t: no root of the minimum-time equation in [0, " << t_max << "]";
    throw ConvergenceError(os.str(), t, r);
  }
  const Root root = bisect(eq, *bracket);
  if (!converged(root.residual, root.t, s.tol)) {
    std::ostringstream os;
    os << "solve_delta_t: bisection stalled with residual " << root.residual;
    throw ConvergenceError(os.str(), root.t, root.residual);
  }
  return {root.t, a * root.t, it + root.iterations, root.residual, SolveMethod::kBisection};
}

}  // namespace zermelo
