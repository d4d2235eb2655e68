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

#include <random>
#include <vector>

#include "zermelo/error.hpp"
#include "zermelo/kernels.hpp"

namespace zermelo::kernels {
namespace {

std::vector<Complex> random_data(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Complex> v(n);
  for (Complex& z : v) z = Complex(u(rng), u(rng));
  return v;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

class BackendGuard {
 public:
  BackendGuard() : saved_(active_backend()) {}
  ~BackendGuard() { set_backend(saved_); }

 private:
  Backend saved_;
};

// Sizes cover the 2-wide vector body, the odd tail, and n = 1.
const std::size_t kSizes[] = {1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 33};

TEST(Kernels, ScalarMatchesTextbookComplexProducts) {
  std::mt19937_64 rng(1);
  for (std::size_t n : kSizes) {
    const auto a = random_data(rng, n * n), x = random_data(rng, n);
    std::vector<Complex> y(n);
    scalar::matvec(a.data(), x.data(), y.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a[i * n + j] * x[j];
      EXPECT_LT(std::abs(s - y[i]), 1e-13);
    }
    Complex d = 0.0;
    for (std::size_t i = 0; i < n; ++i) d += std::conj(x[i]) * y[i];
    EXPECT_LT(std::abs(d - scalar::dot(x.data(), y.data(), n)), 1e-12);
  }
}

TEST(Kernels, Avx2MatchesScalar) {
  if (!avx2_available()) GTEST_SKIP() << "CPU lacks AVX2/FMA";
  std::mt19937_64 rng(2);
  for (std::size_t n : kSizes) {
    const auto a = random_data(rng, n * n), b = random_data(rng, n * n), x = random_data(rng, n);
    std::vector<Complex> y1(n), y2(n), c1(n * n), c2(n * n);
    scalar::matvec(a.data(), x.data(), y1.data(), n);
    avx2::matvec(a.data(), x.data(), y2.data(), n);
    EXPECT_LT(max_diff(y1, y2), 1e-13) << "matvec n=" << n;

    scalar::matmul(a.data(), b.data(), c1.data(), n);
    avx2::matmul(a.data(), b.data(), c2.data(), n);
    EXPECT_LT(max_diff(c1, c2), 1e-12) << "matmul n=" << n;

    EXPECT_LT(std::abs(scalar::dot(a.data(), b.data(), n * n) - avx2::dot(a.data(), b.data(), n * n)), 1e-11)
        << "dot n=" << n;

    const Complex alpha(0.3, -1.7);
    std::vector<Complex> z1 = x, z2 = x;
    scalar::axpy(alpha, y1.data(), z1.data(), n);
    avx2::axpy(alpha, y1.data(), z2.data(), n);
    EXPECT_LT(max_diff(z1, z2), 1e-13) << "axpy n=" << n;
  }
}

TEST(Kernels, DispatchSwitchesBackends) {
  BackendGuard guard;
  set_backend(Backend::kScalar);
  EXPECT_EQ(active_backend(), Backend::kScalar);
  EXPECT_EQ(backend_name(Backend::kScalar), "scalar");
  if (avx2_available()) {
    set_backend(Backend::kAvx2);
    EXPECT_EQ(active_backend(), Backend::kAvx2);
  } else {
    EXPECT_THROW(set_backend(Backend::kAvx2), Error);
  }
}

TEST(Kernels, SpanWrappersAgreeAcrossBackends) {
  if (!avx2_available()) GTEST_SKIP() << "CPU lacks AVX2/FMA";
  BackendGuard guard;
  std::mt19937_64 rng(3);
  const std::size_t n = 6;
  const auto a = random_data(rng, n * n), b = random_data(rng, n * n);
  std::vector<Complex> c1(n * n), c2(n * n);
  set_backend(Backend::kScalar);
  matmul(a, b, c1, n);
  set_backend(Backend::kAvx2);
  matmul(a, b, c2, n);
  EXPECT_LT(max_diff(c1, c2), 1e-12);
}

TEST(Kernels, SizeMismatchThrows) {
  std::vector<Complex> a(9), x(3), y(2);
  EXPECT_THROW(matvec(a, x, y), DimensionError);
  EXPECT_THROW(dot(x, y), DimensionError);
  EXPECT_THROW(axpy(1.0, x, y), DimensionError);
  std::vector<Complex> c(8);
  EXPECT_THROW(matmul(a, a, c, 3), DimensionError);
}

}  // namespace
}  // namespace zermelo::kernels
