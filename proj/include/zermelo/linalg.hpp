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

// Small dense complex linear algebra: square matrices, Hermitian and unitary
// operators, normalized states, Hermitian spectral decomposition and exact
// unitary exponentials built from it. Dimensions in this project stay <= 16.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace zermelo {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-12;

/// Square complex matrix, row-major. Entries are finite on construction.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> row_major);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const noexcept { return dim_; }
  Complex operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }
  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const noexcept;
  double frobenius_norm() const noexcept;
  double max_abs_entry() const noexcept;
  /// Largest |A_ij - conj(A_ji)|.
  double hermiticity_defect() const noexcept;

  ComplexVector apply(std::span<const Complex> x) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// A = A† to within kHermitianTolerance entrywise.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix m);
  /// Hermitian part (M + M†)/2 of a matrix produced by arithmetic on
  /// Hermitian operands. Rejects inputs whose defect exceeds 1e-8 relative
  /// to their largest entry, which would indicate a construction bug.
  static HermitianOperator from_computed(const ComplexMatrix& m);
  static HermitianOperator zero(std::size_t dim);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  Complex operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

  friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);
  friend HermitianOperator operator*(double s, const HermitianOperator& a);

 private:
  struct Unchecked {};
  HermitianOperator(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// U†U = UU† = I to within kUnitaryTolerance entrywise.
class UnitaryOperator {
 public:
  explicit UnitaryOperator(ComplexMatrix m);
  static UnitaryOperator identity(std::size_t dim);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  Complex operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
  UnitaryOperator adjoint() const;

  friend UnitaryOperator operator*(const UnitaryOperator& a, const UnitaryOperator& b);

 private:
  ComplexMatrix m_;
};

/// Largest entrywise deviation of U†U and UU† from the identity.
double unitarity_defect(const ComplexMatrix& u);

/// Unit-norm state, ‖ψ‖ = 1 to within kNormTolerance.
class StateVector {
 public:
  explicit StateVector(ComplexVector amplitudes);
  /// Scales a nonzero vector to unit norm.
  static StateVector normalized(ComplexVector v);
  /// Renormalizes the result of a unitary action after checking its norm
  /// drifted by less than 1e-9.
  static StateVector from_evolved(ComplexVector v);
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amps_.size(); }
  const ComplexVector& amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const noexcept { return amps_[i]; }

  StateVector with_phase(double angle) const;

 private:
  struct Unchecked {};
  StateVector(ComplexVector a, Unchecked) : amps_(std::move(a)) {}
  ComplexVector amps_;
};

/// ⟨a|b⟩.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
Complex inner(const StateVector& a, const StateVector& b);
double norm(std::span<const Complex> v);
/// |⟨a|b⟩|², phase-blind comparison of rays.
double fidelity(const StateVector& a, const StateVector& b);
double fidelity(std::span<const Complex> a, std::span<const Complex> b);

StateVector apply(const UnitaryOperator& u, const StateVector& psi);
/// ⟨ψ|A|ψ⟩.
Complex expectation(const ComplexMatrix& a, std::span<const Complex> psi);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  ///< ascending
  UnitaryOperator eigenvectors;     ///< column k pairs with eigenvalues[k]
};

/// Spectral decomposition of a Hermitian operator. Eigenvalues ascend; each
/// eigenvector's largest-magnitude component (first one on ties) is made real
/// and positive so results are reproducible.
EigenDecomposition hermitian_eigendecompose(const HermitianOperator& a);
/// Validating overload: throws InvariantError carrying the Hermiticity defect.
EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& a);

/// exp(sign·i·h·t) evaluated from a cached decomposition of h.
class SpectralExponential {
 public:
  explicit SpectralExponential(const HermitianOperator& h);

  UnitaryOperator operator()(double t, int sign) const;
  /// exp(sign·i·h·t)·x without forming the matrix.
  ComplexVector apply(double t, int sign, std::span<const Complex> x) const;
  const EigenDecomposition& decomposition() const noexcept { return eig_; }
  std::size_t dim() const noexcept { return eig_.eigenvalues.size(); }

 private:
  EigenDecomposition eig_;
  ComplexMatrix v_adj_;
};

/// exp(sign·i·h·t), sign ∈ {−1, +1}.
UnitaryOperator unitary_exp(const HermitianOperator& h, double t, int sign);

/// ab − ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const HermitianOperator& a, const HermitianOperator& b);

/// tr(ab).
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// |u⟩⟨v|.
ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);
ComplexMatrix outer(const StateVector& u, const StateVector& v);

}  // namespace zermelo
