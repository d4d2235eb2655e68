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
#include <utility>

#include "zermelo/error.hpp"
#include "zermelo/kernels.hpp"
#include "zermelo/linalg.hpp"

namespace zermelo {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    std::ostringstream os;
    os << op << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

std::string describe(const char* what, double deviation, double tol) {
  std::ostringstream os;
  os.precision(3);
  os << what << ": deviation " << std::scientific << deviation << " exceeds tolerance " << tol;
  return os.str();
}

}  // namespace

// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw DimensionError("ComplexMatrix: dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (dim == 0) throw DimensionError("ComplexMatrix: dimension must be positive");
  if (data_.size() != dim * dim) throw DimensionError("ComplexMatrix: entry count is not dim*dim");
  for (const Complex& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvariantError("ComplexMatrix: non-finite entry", INFINITY);
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> data;
  data.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DimensionError("ComplexMatrix::from_rows: matrix is not square");
    data.insert(data.end(), r.begin(), r.end());
  }
  return ComplexMatrix(n, std::move(data));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs_entry() const noexcept {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_defect() const noexcept {
  double d = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> x) const {
  require_same_dim(dim_, x.size(), "ComplexMatrix::apply");
  ComplexVector y(dim_);
  kernels::matvec(data_, x, y);
  return y;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_dim(dim_, o.dim_, "ComplexMatrix::operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_dim(dim_, o.dim_, "ComplexMatrix::operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) noexcept {
  for (Complex& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "ComplexMatrix::operator*");
  ComplexMatrix c(a.dim());
  kernels::matmul(a.data(), b.data(), c.data(), a.dim());
  return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double d = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  return d;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix r(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return r;
}

// HermitianOperator

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
  const double defect = m_.hermiticity_defect();
  if (defect > kHermitianTolerance)
    throw InvariantError(describe("HermitianOperator: matrix is not Hermitian", defect,
                                  kHermitianTolerance),
                         defect);
}

HermitianOperator HermitianOperator::from_computed(const ComplexMatrix& m) {
  const double defect = m.hermiticity_defect();
  const double tol = 1e-8 * std::max(1.0, m.max_abs_entry());
  if (defect > tol)
    throw InvariantError(describe("HermitianOperator::from_computed: product is not Hermitian",
                                  defect, tol),
                         defect);
  ComplexMatrix h = m + m.adjoint();
  h *= 0.5;
  return HermitianOperator(std::move(h), Unchecked{});
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  return HermitianOperator(ComplexMatrix(dim), Unchecked{});
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(a.m_ + b.m_, HermitianOperator::Unchecked{});
}

HermitianOperator operator*(double s, const HermitianOperator& a) {
  return HermitianOperator(a.m_ * Complex(s), HermitianOperator::Unchecked{});
}

// UnitaryOperator

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix ua = u.adjoint();
  const ComplexMatrix id = ComplexMatrix::identity(u.dim());
  return std::max(max_abs_diff(ua * u, id), max_abs_diff(u * ua, id));
}

UnitaryOperator::UnitaryOperator(ComplexMatrix m) : m_(std::move(m)) {
  const double defect = unitarity_defect(m_);
  if (defect > kUnitaryTolerance)
    throw InvariantError(describe("UnitaryOperator: matrix is not unitary", defect, kUnitaryTolerance),
                         defect);
}

UnitaryOperator UnitaryOperator::identity(std::size_t dim) {
  return UnitaryOperator(ComplexMatrix::identity(dim));
}

UnitaryOperator UnitaryOperator::adjoint() const { return UnitaryOperator(m_.adjoint()); }

UnitaryOperator operator*(const UnitaryOperator& a, const UnitaryOperator& b) {
  return UnitaryOperator(a.m_ * b.m_);
}

// StateVector

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

StateVector::StateVector(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw DimensionError("StateVector: dimension must be positive");
  const double deviation = std::abs(norm(amps_) - 1.0);
  if (!(deviation <= kNormTolerance))
    throw InvariantError(describe("StateVector: state is not normalized", deviation, kNormTolerance),
                         deviation);
}

StateVector StateVector::normalized(ComplexVector v) {
  if (v.empty()) throw DimensionError("StateVector: dimension must be positive");
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) throw InvariantError("StateVector: cannot normalize zero vector", n);
  for (Complex& z : v) z /= n;
  return StateVector(std::move(v), Unchecked{});
}

StateVector StateVector::from_evolved(ComplexVector v) {
  const double deviation = std::abs(norm(v) - 1.0);
  if (!(deviation <= 1e-9))
    throw InvariantError(describe("StateVector: evolved state lost normalization", deviation, 1e-9),
                         deviation);
  return normalized(std::move(v));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("StateVector::basis: index out of range");
  ComplexVector v(dim);
  v[index] = 1.0;
  return StateVector(std::move(v), Unchecked{});
}

StateVector StateVector::with_phase(double angle) const {
  ComplexVector v = amps_;
  const Complex p = std::polar(1.0, angle);
  for (Complex& z : v) z *= p;
  return StateVector(std::move(v), Unchecked{});
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  require_same_dim(a.size(), b.size(), "inner");
  return kernels::dot(a, b);
}

Complex inner(const StateVector& a, const StateVector& b) { return inner(a.amplitudes(), b.amplitudes()); }

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner(a, b)); }

double fidelity(std::span<const Complex> a, std::span<const Complex> b) { return std::norm(inner(a, b)); }

StateVector apply(const UnitaryOperator& u, const StateVector& psi) {
  return StateVector::from_evolved(u.matrix().apply(psi.amplitudes()));
}

Complex expectation(const ComplexMatrix& a, std::span<const Complex> psi) {
  const ComplexVector ap = a.apply(psi);
  return inner(psi, ap);
}

// Products

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "commutator");
  return a * b - b * a;
}

ComplexMatrix commutator(const HermitianOperator& a, const HermitianOperator& b) {
  return commutator(a.matrix(), b.matrix());
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "trace_product");
  const std::size_t n = a.dim();
  Complex t = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) t += a(i, k) * b(k, i);
  return t;
}

ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
  require_same_dim(u.size(), v.size(), "outer");
  ComplexMatrix m(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix outer(const StateVector& u, const StateVector& v) { return outer(u.amplitudes(), v.amplitudes()); }

}  // namespace zermelo
