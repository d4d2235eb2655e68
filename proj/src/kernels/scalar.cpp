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

#include "zermelo/kernels.hpp"

// Reference kernels. Complex products are spelled out on real and imaginary
// parts so the compiler does not route through the Annex G multiply helper.

namespace zermelo::kernels::scalar {

namespace {
inline void mul_acc(double& re, double& im, const Complex& a, const Complex& b) noexcept {
  re += a.real() * b.real() - a.imag() * b.imag();
  im += a.real() * b.imag() + a.imag() * b.real();
}
}  // namespace

void matvec(const Complex* a, const Complex* x, Complex* y, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    double re = 0.0, im = 0.0;
    const Complex* row = a + i * n;
    for (std::size_t j = 0; j < n; ++j) mul_acc(re, im, row[j], x[j]);
    y[i] = {re, im};
  }
}

void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = {0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    Complex* crow = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      const Complex* brow = b + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        double re = crow[j].real(), im = crow[j].imag();
        mul_acc(re, im, aik, brow[j]);
        crow[j] = {re, im};
      }
    }
  }
}

Complex dot(const Complex* x, const Complex* y, std::size_t n) noexcept {
  double re = 0.0, im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    re += x[j].real() * y[j].real() + x[j].imag() * y[j].imag();
    im += x[j].real() * y[j].imag() - x[j].imag() * y[j].real();
  }
  return {re, im};
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) noexcept {
  for (std::size_t j = 0; j < n; ++j) {
    double re = y[j].real(), im = y[j].imag();
    mul_acc(re, im, alpha, x[j]);
    y[j] = {re, im};
  }
}

}  // namespace zermelo::kernels::scalar
