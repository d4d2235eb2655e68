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
#include <limits>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "zermelo/error.hpp"
#include "zermelo/linalg.hpp"
#include "zermelo/models.hpp"

namespace zermelo {
namespace {

using models::Pauli;
using models::pauli;
using models::pauli_product;

const Complex kI(0.0, 1.0);

TEST(ComplexMatrix, RejectsNonFiniteAndEmpty) {
  EXPECT_THROW(ComplexMatrix(0), DimensionError);
  EXPECT_THROW(ComplexMatrix(2, {1.0, 2.0, 3.0}), DimensionError);
  EXPECT_THROW(ComplexMatrix(1, {std::numeric_limits<double>::quiet_NaN()}), Error);
  EXPECT_THROW(ComplexMatrix(1, {Complex(0.0, std::numeric_limits<double>::infinity())}), Error);
}

TEST(HermitianOperator, RejectsNonHermitianWithDeviation) {
  ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 2.0}, {2.0 + 1e-9, 1.0}});
  try {
    HermitianOperator h(m);
    FAIL() << "accepted a non-Hermitian matrix";
  } catch (const InvariantError& e) {
    EXPECT_NEAR(e.deviation(), 1e-9, 1e-15);
  }
  EXPECT_NO_THROW(HermitianOperator(ComplexMatrix::from_rows({{1.0, 2.0}, {2.0 + 1e-13, 1.0}})));
}

TEST(UnitaryOperator, RejectsNonUnitary) {
  EXPECT_THROW(UnitaryOperator(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 1.0 + 1e-8}})), InvariantError);
  EXPECT_NO_THROW(UnitaryOperator(pauli(Pauli::kY)));
}

TEST(StateVector, NormalizationContract) {
  EXPECT_THROW(StateVector({1.0, 1e-5}), InvariantError);
  EXPECT_THROW(StateVector(ComplexVector{}), DimensionError);
  EXPECT_THROW(StateVector::normalized({0.0, 0.0}), InvariantError);
  const StateVector s = StateVector::normalized({3.0, Complex(0.0, 4.0)});
  EXPECT_NEAR(norm(s.amplitudes()), 1.0, 1e-15);
  EXPECT_THROW(StateVector::from_evolved({1.0, 1e-4}), InvariantError);
}

TEST(Eigen, ZeroMatrix) {
  const EigenDecomposition e = hermitian_eigendecompose(HermitianOperator::zero(2));
  EXPECT_EQ(e.eigenvalues[0], 0.0);
  EXPECT_EQ(e.eigenvalues[1], 0.0);
  EXPECT_LT(max_abs_diff(e.eigenvectors.matrix(), ComplexMatrix::identity(2)), 1e-15);
}

TEST(Eigen, PauliZ) {
  const EigenDecomposition e = hermitian_eigendecompose(HermitianOperator(pauli(Pauli::kZ)));
  EXPECT_DOUBLE_EQ(e.eigenvalues[0], -1.0);
  EXPECT_DOUBLE_EQ(e.eigenvalues[1], 1.0);
  // Largest component of each column is real-positive.
  EXPECT_NEAR(e.eigenvectors(1, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(e.eigenvectors(0, 1).real(), 1.0, 1e-15);
}

TEST(Eigen, DimerSpectrum) {
  const EigenDecomposition e = hermitian_eigendecompose(models::dimer_h0({1.0, 0.5, 2.0}));
  const double expected[] = {-2.5, -1.5, 0.5, 3.5};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(e.eigenvalues[i], expected[i], 1e-12);
}

TEST(Eigen, RoundTripOnThousandRandomMatrices) {
  std::mt19937_64 rng(oracle::kSeed);
  std::uniform_int_distribution<std::size_t> dim(2, 16);
  double worst = 0.0, worst_eig = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = dim(rng);
    const HermitianOperator h = oracle::random_hermitian(rng, n, 5.0);
    const EigenDecomposition e = hermitian_eigendecompose(h);
    ComplexMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = e.eigenvalues[i];
    const ComplexMatrix& v = e.eigenvectors.matrix();
    worst = std::max(worst, max_abs_diff(oracle::naive_mul(oracle::naive_mul(v, d), v.adjoint()), h.matrix()));
    for (std::size_t c = 0; c + 1 < n; ++c) ASSERT_LE(e.eigenvalues[c], e.eigenvalues[c + 1]);
    for (std::size_t c = 0; c < n; ++c) {
      ComplexVector col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = v(i, c);
      const ComplexVector hv = oracle::naive_apply(h.matrix(), col);
      for (std::size_t i = 0; i < n; ++i)
        worst_eig = std::max(worst_eig, std::abs(hv[i] - e.eigenvalues[c] * col[i]));
    }
  }
  EXPECT_LT(worst, 1e-10);
  EXPECT_LT(worst_eig, 1e-10);
}

TEST(Eigen, ValidatingOverloadRejectsNonHermitian) {
  EXPECT_THROW(hermitian_eigendecompose(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})), InvariantError);
}

TEST(UnitaryExp, ZeroGeneratorIsIdentity) {
  EXPECT_LT(max_abs_diff(unitary_exp(HermitianOperator::zero(3), 12.3, -1).matrix(), ComplexMatrix::identity(3)),
            1e-15);
}

TEST(UnitaryExp, PauliZAtPi) {
  const UnitaryOperator u = unitary_exp(HermitianOperator(pauli(Pauli::kZ)), std::numbers::pi, -1);
  EXPECT_LT(max_abs_diff(u.matrix(), ComplexMatrix::identity(2) * Complex(-1.0)), 1e-15);
}

TEST(UnitaryExp, MatchesTaylorOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianOperator h = oracle::random_hermitian(rng, 4, 3.0);
    for (int sign : {-1, 1}) {
      const ComplexMatrix ref = oracle::taylor_expm(h.matrix(), 0.7, sign);
      EXPECT_LT(max_abs_diff(unitary_exp(h, 0.7, sign).matrix(), ref), 1e-12);
    }
  }
}

TEST(UnitaryExp, InverseAndGroupLaws) {
  std::mt19937_64 rng(8);
  for (std::size_t n : {2, 5, 8, 16}) {
    const HermitianOperator h = oracle::random_hermitian(rng, n, 4.0);
    const ComplexMatrix id = ComplexMatrix::identity(n);
    EXPECT_LT(max_abs_diff((unitary_exp(h, 1.3, -1) * unitary_exp(h, 1.3, 1)).matrix(), id), 1e-10);
    EXPECT_LT(max_abs_diff(unitary_exp(h, 0.4 + 0.9, 1).matrix(), (unitary_exp(h, 0.4, 1) * unitary_exp(h, 0.9, 1)).matrix()),
              1e-10);
  }
  EXPECT_THROW(unitary_exp(HermitianOperator::zero(2), 1.0, 0), Error);
}

TEST(Commutator, PauliAlgebra) {
  const ComplexMatrix x = pauli(Pauli::kX), y = pauli(Pauli::kY), z = pauli(Pauli::kZ);
  EXPECT_EQ(commutator(x, x).max_abs_entry(), 0.0);
  EXPECT_LT(max_abs_diff(commutator(x, y), z * (2.0 * kI)), 1e-15);
  EXPECT_THROW(commutator(x, ComplexMatrix::identity(3)), DimensionError);
}

TEST(Commutator, AntiHermitianForHermitianArguments) {
  std::mt19937_64 rng(9);
  const HermitianOperator a = oracle::random_hermitian(rng, 6, 2.0), b = oracle::random_hermitian(rng, 6, 2.0);
  const ComplexMatrix c = commutator(a, b);
  EXPECT_LT(max_abs_diff(c.adjoint(), c * Complex(-1.0)), 1e-14);
}

TEST(TraceProduct, Basics) {
  EXPECT_EQ(trace_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), Complex(2.0));
  EXPECT_EQ(trace_product(pauli(Pauli::kZ), pauli(Pauli::kZ)), Complex(2.0));
  EXPECT_THROW(trace_product(ComplexMatrix::identity(2), ComplexMatrix::identity(3)), DimensionError);
}

TEST(Outer, BasisElement) {
  const ComplexMatrix m = outer(StateVector::basis(2, 0), StateVector::basis(2, 1));
  EXPECT_EQ(m, ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}));
}

TEST(Outer, BellIdentity) {
  const auto bell = models::bell_states();
  const ComplexMatrix lhs = outer(bell[0], bell[1]);
  const ComplexMatrix zeeman = pauli_product(Pauli::kZ, Pauli::kI) + pauli_product(Pauli::kI, Pauli::kZ);
  const ComplexMatrix xy = pauli_product(Pauli::kX, Pauli::kY) + pauli_product(Pauli::kY, Pauli::kX);
  const ComplexMatrix rhs = zeeman * Complex(0.25) - xy * (0.25 * kI);
  EXPECT_LT(max_abs_diff(lhs, rhs), 1e-15);
}

TEST(Outer, ProjectorIdempotent) {
  std::mt19937_64 rng(10);
  const StateVector u = oracle::random_state(rng, 7);
  const ComplexMatrix p = outer(u, u);
  EXPECT_LT(max_abs_diff(p * p, p), 1e-12);
  EXPECT_THROW(outer(u, StateVector::basis(2, 0)), DimensionError);
}

TEST(Apply, DimensionsMustMatch) {
  EXPECT_THROW(ComplexMatrix::identity(2).apply(ComplexVector(3)), DimensionError);
  EXPECT_THROW(inner(ComplexVector(2), ComplexVector(3)), DimensionError);
}

TEST(Kron, PauliProduct) {
  const ComplexMatrix zz = kron(pauli(Pauli::kZ), pauli(Pauli::kZ));
  const Complex d[] = {1.0, -1.0, -1.0, 1.0};
  EXPECT_EQ(zz, ComplexMatrix::diagonal(d));
}

}  // namespace
}  // namespace zermelo
