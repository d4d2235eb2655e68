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

#if defined(ZERMELO_HAVE_AVX2_TU) && defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

// One __m256d holds two interleaved complex doubles (re0, im0, re1, im1).
// Odd-length tails fall back to the scalar path for the last element.

namespace zermelo::kernels::avx2 {

namespace {

inline __m256d load2(const Complex* p) noexcept {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(Complex* p, __m256d v) noexcept {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// a * b lane-wise for two complex pairs.
inline __m256d cmul(__m256d a, __m256d b) noexcept {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d b_sw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

// acc + alpha * b with alpha pre-broadcast into re/im registers.
inline __m256d cmul_bcast_add(__m256d alpha_re, __m256d alpha_im, __m256d b,
                              __m256d acc) noexcept {
  const __m256d b_sw = _mm256_permute_pd(b, 0x5);
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(alpha_re, b, _mm256_mul_pd(alpha_im, b_sw)));
}

inline Complex hsum(__m256d v) noexcept {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

inline Complex scalar_mul(const Complex& a, const Complex& b) noexcept {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

void matvec(const Complex* a, const Complex* x, Complex* y, std::size_t n) noexcept {
  const std::size_t pairs = n / 2 * 2;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex* row = a + i * n;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < pairs; j += 2) acc = _mm256_add_pd(acc, cmul(load2(row + j), load2(x + j)));
    Complex s = hsum(acc);
    if (pairs != n) s += scalar_mul(row[n - 1], x[n - 1]);
    y[i] = s;
  }
}

void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n) noexcept {
  const std::size_t pairs = n / 2 * 2;
  for (std::size_t i = 0; i < n * n; ++i) c[i] = {0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    Complex* crow = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      const __m256d are = _mm256_set1_pd(aik.real());
      const __m256d aim = _mm256_set1_pd(aik.imag());
      const Complex* brow = b + k * n;
      for (std::size_t j = 0; j < pairs; j += 2)
        store2(crow + j, cmul_bcast_add(are, aim, load2(brow + j), load2(crow + j)));
      if (pairs != n) crow[n - 1] += scalar_mul(aik, brow[n - 1]);
    }
  }
}

Complex dot(const Complex* x, const Complex* y, std::size_t n) noexcept {
  const std::size_t pairs = n / 2 * 2;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t j = 0; j < pairs; j += 2) {
    const __m256d xv = load2(x + j);
    const __m256d yv = load2(y + j);
    const __m256d x_re = _mm256_movedup_pd(xv);
    const __m256d x_im = _mm256_permute_pd(xv, 0xF);
    const __m256d y_sw = _mm256_permute_pd(yv, 0x5);
    // even: xr*yr + xi*yi, odd: xr*yi - xi*yr
    acc = _mm256_add_pd(acc, _mm256_fmsubadd_pd(x_re, yv, _mm256_mul_pd(x_im, y_sw)));
  }
  Complex s = hsum(acc);
  if (pairs != n) s += scalar_mul(std::conj(x[n - 1]), y[n - 1]);
  return s;
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) noexcept {
  const std::size_t pairs = n / 2 * 2;
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  for (std::size_t j = 0; j < pairs; j += 2)
    store2(y + j, cmul_bcast_add(are, aim, load2(x + j), load2(y + j)));
  if (pairs != n) y[n - 1] += scalar_mul(alpha, x[n - 1]);
}

}  // namespace zermelo::kernels::avx2

#else

// Non-x86 builds: the symbols exist so the dispatch table links, but
// avx2_available() reports false and they are never selected.
namespace zermelo::kernels::avx2 {
void matvec(const Complex* a, const Complex* x, Complex* y, std::size_t n) noexcept {
  scalar::matvec(a, x, y, n);
}
void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n) noexcept {
  scalar::matmul(a, b, c, n);
}
Complex dot(const Complex* x, const Complex* y, std::size_t n) noexcept {
  return scalar::dot(x, y, n);
}
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) noexcept {
  scalar::axpy(alpha, x, y, n);
}
}  // namespace zermelo::kernels::avx2

#endif
