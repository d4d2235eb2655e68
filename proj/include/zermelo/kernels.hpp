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

// Dense complex inner loops used by the linear-algebra layer and the ODE
// integrator. Every kernel has a portable scalar reference and an AVX2/FMA
// variant; the active table is chosen once at startup from CPU features and
// may be overridden with ZERMELO_KERNELS=scalar|avx2.
//
// Layout: row-major, interleaved std::complex<double>. No alignment
// requirement. Output buffers must not alias inputs.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace zermelo::kernels {

using Complex = std::complex<double>;

enum class Backend { kScalar, kAvx2 };

std::string_view backend_name(Backend b);

/// True when the running CPU supports AVX2 and FMA and the AVX2 unit was built.
bool avx2_available() noexcept;

Backend active_backend() noexcept;

/// Switches the dispatch table. Throws zermelo::Error if `b` is unavailable.
/// Meant for startup and tests; not synchronized with in-flight kernels.
void set_backend(Backend b);

/// y = A x, A is n×n with n = x.size().
void matvec(std::span<const Complex> a, std::span<const Complex> x, std::span<Complex> y);

/// C = A B for n×n matrices.
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
            std::size_t n);

/// Returns sum_j conj(x_j) y_j.
Complex dot(std::span<const Complex> x, std::span<const Complex> y);

/// y += alpha x.
void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);

struct Table {
  void (*matvec)(const Complex* a, const Complex* x, Complex* y, std::size_t n) noexcept;
  void (*matmul)(const Complex* a, const Complex* b, Complex* c, std::size_t n) noexcept;
  Complex (*dot)(const Complex* x, const Complex* y, std::size_t n) noexcept;
  void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t n) noexcept;
};

namespace scalar {
void matvec(const Complex* a, const Complex* x, Complex* y, std::size_t n) noexcept;
void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n) noexcept;
Complex dot(const Complex* x, const Complex* y, std::size_t n) noexcept;
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) noexcept;
}  // namespace scalar

namespace avx2 {
void matvec(const Complex* a, const Complex* x, Complex* y, std::size_t n) noexcept;
void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n) noexcept;
Complex dot(const Complex* x, const Complex* y, std::size_t n) noexcept;
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) noexcept;
}  // namespace avx2

/// Table for a specific backend; exposed so tests can compare variants
/// without touching the global selection.
const Table& table_for(Backend b);

}  // namespace zermelo::kernels
