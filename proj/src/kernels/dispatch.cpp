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

#include <atomic>
#include <cstdlib>
#include <string>

#include "zermelo/error.hpp"
#include "zermelo/kernels.hpp"

namespace zermelo::kernels {

namespace {

constexpr Table kScalarTable{&scalar::matvec, &scalar::matmul, &scalar::dot, &scalar::axpy};
constexpr Table kAvx2Table{&avx2::matvec, &avx2::matmul, &avx2::dot, &avx2::axpy};

bool detect_avx2() noexcept {
#if defined(ZERMELO_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend initial_backend() noexcept {
  const bool have = detect_avx2();
  if (const char* env = std::getenv("ZERMELO_KERNELS")) {
    const std::string v(env);
    if (v == "scalar") return Backend::kScalar;
    if (v == "avx2" && have) return Backend::kAvx2;
  }
  return have ? Backend::kAvx2 : Backend::kScalar;
}

std::atomic<const Table*>& active_table() noexcept {
  static std::atomic<const Table*> table{initial_backend() == Backend::kAvx2 ? &kAvx2Table
                                                                             : &kScalarTable};
  return table;
}

const Table& current() noexcept { return *active_table().load(std::memory_order_relaxed); }

void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace

std::string_view backend_name(Backend b) {
  return b == Backend::kAvx2 ? "avx2" : "scalar";
}

bool avx2_available() noexcept {
  static const bool have = detect_avx2();
  return have;
}

Backend active_backend() noexcept {
  return active_table().load() == &kAvx2Table ? Backend::kAvx2 : Backend::kScalar;
}

void set_backend(Backend b) {
  if (b == Backend::kAvx2 && !avx2_available())
    throw Error("AVX2 kernels requested but not supported on this CPU");
  active_table().store(b == Backend::kAvx2 ? &kAvx2Table : &kScalarTable);
}

const Table& table_for(Backend b) {
  if (b == Backend::kAvx2 && !avx2_available())
    throw Error("AVX2 kernels requested but not supported on this CPU");
  return b == Backend::kAvx2 ? kAvx2Table : kScalarTable;
}

void matvec(std::span<const Complex> a, std::span<const Complex> x, std::span<Complex> y) {
  const std::size_t n = x.size();
  require(a.size() == n * n && y.size() == n, "matvec: shape mismatch");
  current().matvec(a.data(), x.data(), y.data(), n);
}

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
            std::size_t n) {
  require(a.size() == n * n && b.size() == n * n && c.size() == n * n, "matmul: shape mismatch");
  current().matmul(a.data(), b.data(), c.data(), n);
}

Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
  require(x.size() == y.size(), "dot: length mismatch");
  return current().dot(x.data(), y.data(), x.size());
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  require(x.size() == y.size(), "axpy: length mismatch");
  current().axpy(alpha, x.data(), y.data(), x.size());
}

}  // namespace zermelo::kernels
