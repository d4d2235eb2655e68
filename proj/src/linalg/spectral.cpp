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

#include <Eigen/Eigenvalues>
#include <cmath>

#include "zermelo/error.hpp"
#include "zermelo/linalg.hpp"

namespace zermelo {

namespace {

using RowMajorXcd = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void fix_phase(ComplexMatrix& v, std::size_t col) {
  const std::size_t n = v.dim();
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::abs(v(i, col));
    if (a > best_abs * (1.0 + 1e-12) + 1e-14) {
      best = i;
      best_abs = a;
    }
  }
  const Complex pivot = v(best, col);
  const Complex rot = std::conj(pivot) / std::abs(pivot);
  for (std::size_t i = 0; i < n; ++i) v(i, col) *= rot;
  v(best, col) = std::abs(pivot);
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw Error("unitary_exp: sign must be +1 or -1");
}

}  // namespace

EigenDecomposition hermitian_eigendecompose(const HermitianOperator& a) {
  const std::size_t n = a.dim();
  Eigen::Map<const RowMajorXcd> map(a.matrix().data().data(), static_cast<Eigen::Index>(n),
                                    static_cast<Eigen::Index>(n));
  const Eigen::MatrixXcd dense = map;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
  if (solver.info() != Eigen::Success) throw Error("hermitian_eigendecompose: eigensolver failed");

  std::vector<double> values(n);
  ComplexMatrix vectors(n);
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = solver.eigenvalues()(static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < n; ++i)
      vectors(i, k) = solver.eigenvectors()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
    fix_phase(vectors, k);
  }
  return {std::move(values), UnitaryOperator(std::move(vectors))};
}

EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& a) {
  return hermitian_eigendecompose(HermitianOperator(a));
}

SpectralExponential::SpectralExponential(const HermitianOperator& h)
    : eig_(hermitian_eigendecompose(h)), v_adj_(eig_.eigenvectors.matrix().adjoint()) {}

UnitaryOperator SpectralExponential::operator()(double t, int sign) const {
  check_sign(sign);
  const std::size_t n = dim();
  const ComplexMatrix& v = eig_.eigenvectors.matrix();
  ComplexMatrix scaled(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, sign * eig_.eigenvalues[k] * t);
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) = v(i, k) * phase;
  }
  return UnitaryOperator(scaled * v_adj_);
}

ComplexVector SpectralExponential::apply(double t, int sign, std::span<const Complex> x) const {
  check_sign(sign);
  ComplexVector c = v_adj_.apply(x);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= std::polar(1.0, sign * eig_.eigenvalues[k] * t);
  return eig_.eigenvectors.matrix().apply(c);
}

UnitaryOperator unitary_exp(const HermitianOperator& h, double t, int sign) {
  return SpectralExponential(h)(t, sign);
}

}  // namespace zermelo
