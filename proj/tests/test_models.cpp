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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "presets.hpp"
#include "zermelo/error.hpp"
#include "zermelo/models.hpp"

namespace zermelo::models {
namespace {

using std::numbers::pi;
using testing::kDefaultDimer;

ComplexMatrix zeeman_sum() { return pauli_product(Pauli::kZ, Pauli::kI) + pauli_product(Pauli::kI, Pauli::kZ); }

/// Matrix of `h` in the Bell basis (Φ₊, Φ₋, Φ̄₊, Φ̄₋).
ComplexMatrix in_bell_basis(const ComplexMatrix& h) {
  const auto bell = bell_states();
  ComplexMatrix m(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = inner(bell[i].amplitudes(), h.apply(bell[j].amplitudes()));
  return m;
}

TEST(Oscillator, MinimumTime) {
  for (double k : {0.3, 2.0, 4.5}) EXPECT_NEAR(solve(oscillator_problem(2.0, k)).delta_t, pi / std::sqrt(2.0 * k), 1e-12);
  EXPECT_NEAR(solve(oscillator_problem(1.0, 4.5)).delta_t, pi / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(OscillatorPreset(2.0).eps_f, 3.0);
  EXPECT_THROW(OscillatorPreset(0.0), Error);
}

TEST(Oscillator, ControlSpectrum) {
  const ZermeloSolution s = solve(oscillator_problem(1.0, 3.0));
  const auto e = hermitian_eigendecompose(s.hc_initial).eigenvalues;
  EXPECT_NEAR(e[0], -std::sqrt(1.5), 1e-12);
  EXPECT_NEAR(e[1], std::sqrt(1.5), 1e-12);
}

TEST(Oscillator, PositionCouplingWeightIsCosine) {
  for (double k : {0.7, 2.0, 4.5, 10.0}) {
    const ZermeloSolution s = solve(oscillator_problem(1.0, k));
    const double expected = std::abs(std::cos(1.5 * pi / std::sqrt(2.0 * k)));
    EXPECT_NEAR(oscillator_momentum_weight(s.hc_initial), expected, 1e-12) << k;
  }
}

TEST(Quantization, Formula) {
  EXPECT_DOUBLE_EQ(quantized_k(1.5, 0), 4.5);
  EXPECT_DOUBLE_EQ(quantized_k(1.5, 1), 0.5);
  double prev = quantized_k(1.5, 0);
  for (int n = 1; n < 200; ++n) {
    const double k = quantized_k(1.5, n);
    EXPECT_LT(k, prev);
    prev = k;
  }
  EXPECT_LT(prev, 1e-4);
  EXPECT_THROW(quantized_k(0.0, 0), Error);
  EXPECT_THROW(quantized_k(1.0, -1), Error);
}

TEST(Quantization, TableShape) {
  const QuantizationTable t = quantization_table(1.5, 4);
  ASSERT_EQ(t.rows.size(), 5u);
  EXPECT_DOUBLE_EQ(t.rows[0].k, 2.0 * 1.5 * 1.5);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    EXPECT_EQ(t.rows[i].n, static_cast<int>(i));
    const double m = t.rows[i].n + 0.5;
    EXPECT_NEAR(t.rows[i].k * m * m, 1.5 * 1.5 / 2.0, 1e-14);
    if (i > 0) {
      EXPECT_LT(t.rows[i].k, t.rows[i - 1].k);
      EXPECT_GT(t.rows[i].delta_t, t.rows[i - 1].delta_t);
    }
  }
}

TEST(Quantization, EveryRowIsZeeman) {
  const double eps_f = bell_swap_eps_f(kDefaultDimer);
  for (const QuantizationRow& row : quantization_table(eps_f, 6).rows) {
    const ZermeloSolution s = solve(bell_swap_problem(kDefaultDimer, row.k));
    EXPECT_LT(non_zeeman_weight(pauli_decompose(s.hc_initial)), 1e-9) << row.n;
    EXPECT_NEAR(s.delta_t, row.delta_t, 1e-12);
  }
  for (const QuantizationRow& row : quantization_table(1.5, 6).rows) {
    const ZermeloSolution s = solve(oscillator_problem(1.0, row.k));
    EXPECT_LT(oscillator_momentum_weight(s.hc_initial), 1e-9) << row.n;
  }
}

TEST(Dimer, ZeroCouplings) { EXPECT_EQ(dimer_h0({}).matrix().max_abs_entry(), 0.0); }

TEST(Dimer, SpectrumAndEigenvectors) {
  const DimerParams j{0.7, -0.4, 1.3};
  const HermitianOperator h = dimer_h0(j);
  const auto bell = bell_states();
  for (Bell b : {Bell::kPhiPlus, Bell::kPhiMinus, Bell::kPhiBarPlus, Bell::kPhiBarMinus}) {
    const StateVector& v = bell[static_cast<std::size_t>(b)];
    const ComplexVector hv = h.matrix().apply(v.amplitudes());
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(hv[i] - bell_energy(j, b) * v[i]), 0.0, 1e-15);
  }
  EXPECT_DOUBLE_EQ(bell_energy(j, Bell::kPhiPlus), -(j.j_z + j.j_minus()));
  EXPECT_DOUBLE_EQ(bell_energy(j, Bell::kPhiMinus), -(j.j_z - j.j_minus()));
  EXPECT_DOUBLE_EQ(bell_energy(j, Bell::kPhiBarPlus), j.j_z - j.j_plus());
  EXPECT_DOUBLE_EQ(bell_energy(j, Bell::kPhiBarMinus), j.j_z + j.j_plus());
}

TEST(Dimer, BellBlocksDecouple) {
  const ComplexMatrix m = in_bell_basis(dimer_h0({0.9, 0.2, -1.7}).matrix());
  for (std::size_t i : {0u, 1u})
    for (std::size_t j : {2u, 3u}) {
      EXPECT_EQ(m(i, j), Complex(0.0));
      EXPECT_EQ(m(j, i), Complex(0.0));
    }
}

TEST(Dimer, MatchesHeisenbergForm) {
  const DimerParams j{0.9, 0.2, -1.7};
  const ComplexMatrix h = (pauli_product(Pauli::kX, Pauli::kX) * Complex(j.j_x) +
                           pauli_product(Pauli::kY, Pauli::kY) * Complex(j.j_y) +
                           pauli_product(Pauli::kZ, Pauli::kZ) * Complex(j.j_z)) *
                          Complex(-1.0);
  EXPECT_LT(max_abs_diff(h, dimer_h0(j).matrix()), 1e-15);
}

TEST(Bell, States) {
  const auto bell = bell_states();
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_EQ(bell[0].amplitudes(), (ComplexVector{s, 0.0, 0.0, s}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_NEAR(std::abs(inner(bell[i], bell[j])), i == j ? 1.0 : 0.0, 1e-15);
  EXPECT_EQ(bell_from_name("phibar-"), Bell::kPhiBarMinus);
  EXPECT_THROW(bell_from_name("psi+"), ConfigError);
  EXPECT_THROW(spin_flip_problem(kDefaultDimer, Bell::kPhiPlus, Bell::kPhiPlus, 1.0), Error);
}

TEST(BellSwap, MinimumTimeForAnyK) {
  for (double k : {0.1, 1.0, 7.0, 100.0})
    EXPECT_NEAR(solve(bell_swap_problem(kDefaultDimer, k)).delta_t, pi / std::sqrt(2.0 * k), 1e-12);
}

TEST(BellSwap, ZeemanControlAtMaximalK) {
  for (const DimerParams& j : {kDefaultDimer, cu_acetate_preset().params, DimerParams{-0.3, 0.8, 0.25}}) {
    const double b0 = j.j_z - j.j_minus();
    const ZermeloSolution s = solve(bell_swap_problem(j, 2.0 * b0 * b0));
    EXPECT_LT(max_abs_diff(s.hc_initial.matrix(), zeeman_sum() * Complex(b0 / 2.0)), 1e-10);
  }
}

TEST(BellSwap, FullHamiltonianBlockAndEigenvalues) {
  for (const DimerParams& j : {kDefaultDimer, DimerParams{0.6, 0.1, -0.9}, DimerParams{2.0, -1.0, 0.5}}) {
    const double b0 = j.j_z - j.j_minus();
    const ZermeloSolution s = solve(bell_swap_problem(j, 2.0 * b0 * b0));
    const ComplexMatrix h = dimer_h0(j).matrix() + s.hc_initial.matrix();
    const ComplexMatrix block = ComplexMatrix::from_rows({{-(j.j_z + j.j_minus()), b0, 0.0, 0.0},
                                                          {b0, -(j.j_z - j.j_minus()), 0.0, 0.0},
                                                          {0.0, 0.0, j.j_z - j.j_plus(), 0.0},
                                                          {0.0, 0.0, 0.0, j.j_z + j.j_plus()}});
    EXPECT_LT(max_abs_diff(in_bell_basis(h), block), 1e-12);
    const double alpha = -j.j_minus() / b0, beta = std::sqrt(alpha * alpha + 1.0);
    std::vector<double> expected = {-j.j_z - b0 * beta, -j.j_z + b0 * beta, j.j_z - j.j_plus(), j.j_z + j.j_plus()};
    std::sort(expected.begin(), expected.end());
    const auto e = hermitian_eigendecompose(HermitianOperator::from_computed(h)).eigenvalues;
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(e[i], expected[i], 1e-10);
  }
}

TEST(Pauli, Decompose) {
  const PauliDecomposition d = pauli_decompose(HermitianOperator(pauli_product(Pauli::kZ, Pauli::kI)));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ(d.c[a][b], (a == 3 && b == 0) ? 1.0 : 0.0);
  EXPECT_THROW(pauli_decompose(HermitianOperator::zero(2)), DimensionError);
}

TEST(Pauli, RoundTrip) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianOperator h = oracle::random_hermitian(rng, 4, 3.0);
    EXPECT_LT(max_abs_diff(pauli_decompose(h).reconstruct().matrix(), h.matrix()), 1e-12);
  }
}

TEST(Pauli, BellControlWeights) {
  for (double k : {0.4, 1.0, 3.3, 9.0}) {
    const double eps = bell_swap_eps_f(kDefaultDimer);
    const double theta = eps * pi / std::sqrt(2.0 * k);
    const double a = std::sqrt(k / 2.0);
    const PauliDecomposition d = pauli_decompose(solve(bell_swap_problem(kDefaultDimer, k)).hc_initial);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const auto pa = static_cast<Pauli>(i), pb = static_cast<Pauli>(j);
        double expected = 0.0;
        if ((pa == Pauli::kZ && pb == Pauli::kI) || (pa == Pauli::kI && pb == Pauli::kZ))
          expected = -0.5 * a * std::sin(theta);
        if ((pa == Pauli::kX && pb == Pauli::kY) || (pa == Pauli::kY && pb == Pauli::kX))
          expected = -0.5 * a * std::cos(theta);
        EXPECT_NEAR(d.c[i][j], expected, 1e-12) << i << j << " k=" << k;
      }
    EXPECT_NEAR(non_zeeman_weight(d), std::abs(std::cos(theta)), 1e-12);
  }
}

TEST(Zeeman, CosineRoute) {
  const Realizability r0 = zeeman_realizability(1.5, 2.0 * 1.5 * 1.5);
  EXPECT_TRUE(r0.realizable);
  EXPECT_EQ(r0.nearest_n, 0);
  EXPECT_LT(r0.deviation, 1e-12);
  const Realizability r1 = zeeman_realizability(1.5, 1.5 * 1.5);
  EXPECT_FALSE(r1.realizable);
  EXPECT_NEAR(r1.deviation, std::abs(std::cos(pi / std::sqrt(2.0))), 1e-15);
  EXPECT_EQ(zeeman_realizability(-1.5, quantized_k(1.5, 3)).nearest_n, 3);
  EXPECT_THROW(zeeman_realizability(0.0, 1.0), Error);
  EXPECT_THROW(zeeman_realizability(1.0, 0.0), Error);
}

TEST(Zeeman, RoutesAgreeOnRandomK) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> kd(0.05, 20.0);
  const double eps = bell_swap_eps_f(kDefaultDimer);
  for (int trial = 0; trial < 100; ++trial) {
    const double k = trial % 10 == 0 ? quantized_k(eps, trial / 10) : kd(rng);
    const ZermeloSolution s = solve(bell_swap_problem(kDefaultDimer, k));
    const Realizability c = zeeman_realizability(eps, k);
    const Realizability p = zeeman_realizability_pauli(s.hc_initial, eps, k);
    EXPECT_EQ(c.realizable, p.realizable) << k;
    EXPECT_EQ(c.nearest_n, p.nearest_n);
    EXPECT_NEAR(c.deviation, p.deviation, 1e-10) << k;
  }
}

TEST(Units, RoundTrip) {
  for (double nu : {1e-3, 0.04, 74.6, 3.0e4}) {
    const double w = PhysicalUnits::angular_frequency(nu);
    EXPECT_NEAR(PhysicalUnits::wavenumber(w) / nu, 1.0, 1e-14);
  }
  for (double t : {1e-3, 0.021, 5.0})
    EXPECT_NEAR(PhysicalUnits::natural_time(PhysicalUnits::seconds(t)) / t, 1.0, 1e-14);
  EXPECT_DOUBLE_EQ(PhysicalUnits::angular_frequency(1.0), 2.0 * pi * 2.99792458e10);
}

TEST(CuAcetate, Preset) {
  const CuAcetatePreset c = cu_acetate_preset();
  EXPECT_NEAR(c.raw_cm[0] - c.raw_cm[1], 0.040, 1e-12);
  EXPECT_DOUBLE_EQ(c.params.j_z, 298.453 / -4.0);
  EXPECT_DOUBLE_EQ(c.g_z, 2.43);
  EXPECT_DOUBLE_EQ(c.expected_delta_t_ps, 0.2);
  const double eps = bell_swap_eps_f(c.params);
  EXPECT_NEAR(eps, -c.params.j_z + c.params.j_minus(), 0.0);
  const double k = quantized_k(eps, 0);
  EXPECT_NEAR(k, 2.0 * std::pow(c.params.j_z - c.params.j_minus(), 2), 1e-9);
  const double dt = solve(bell_swap_problem(c.params, k)).delta_t;
  EXPECT_NEAR(dt, pi / (2.0 * std::abs(eps)), 1e-14);
  const double ps = PhysicalUnits::seconds(dt) * 1e12;
  EXPECT_GE(ps, 0.1);
  EXPECT_LE(ps, 0.4);
}

TEST(Presets, OrthogonalTimeLaw) {
  for (const auto& [name, p] : testing::preset_problems())
    EXPECT_NEAR(solve(p).delta_t * std::sqrt(2.0 * p.k()), pi, 1e-11) << name;
}

}  // namespace
}  // namespace zermelo::models
