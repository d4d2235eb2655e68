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
#include <numbers>
#include <sstream>

#include "zermelo/error.hpp"
#include "zermelo/models.hpp"

namespace zermelo::models {

double quantized_k(double eps_f, int n) {
  if (eps_f == 0.0 || !std::isfinite(eps_f)) throw Error("quantized_k: eps_f = 0 admits no quantization");
  if (n < 0) throw Error("quantized_k: n must be non-negative");
  const double m = n + 0.5;
  return eps_f * eps_f / (2.0 * m * m);
}

double orthogonal_delta_t(double k) {
  if (!(k > 0.0)) throw Error("orthogonal_delta_t: k must be positive");
  return std::numbers::pi / std::sqrt(2.0 * k);
}

QuantizationTable quantization_table(double eps_f, int n_max) {
  if (n_max < 0) throw Error("quantization_table: n_max must be non-negative");
  QuantizationTable t{eps_f, {}};
  t.rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double k = quantized_k(eps_f, n);
    t.rows.push_back({n, k, orthogonal_delta_t(k)});
  }
  return t;
}

namespace {

int nearest_quantum(double eps_f, double k) {
  const double m = std::abs(eps_f) / std::sqrt(2.0 * k) - 0.5;
  return std::max(0, static_cast<int>(std::lround(m)));
}

void check_args(double eps_f, double k) {
  if (eps_f == 0.0 || !std::isfinite(eps_f)) throw Error("zeeman_realizability: eps_f must be nonzero");
  if (!(k > 0.0) || !std::isfinite(k)) throw Error("zeeman_realizability: k must be positive");
}

}  // namespace

Realizability zeeman_realizability(double eps_f, double k, double tol) {
  check_args(eps_f, k);
  const double dev = std::abs(std::cos(eps_f * std::numbers::pi / std::sqrt(2.0 * k)));
  return {dev <= tol, nearest_quantum(eps_f, k), dev};
}

Realizability zeeman_realizability_pauli(const HermitianOperator& hc, double eps_f, double k, double tol) {
  check_args(eps_f, k);
  const double dev = non_zeeman_weight(pauli_decompose(hc));
  return {dev <= tol, nearest_quantum(eps_f, k), dev};
}

double oscillator_momentum_weight(const HermitianOperator& hc) {
  if (hc.dim() != 2) throw DimensionError("oscillator_momentum_weight: control must be 2x2");
  // c_x σx + c_y σy + c_z σz + c_0 I
  const Complex off = hc(1, 0);
  const double cx = off.real();
  const double cy = off.imag();
  const double cz = 0.5 * (hc(0, 0).real() - hc(1, 1).real());
  const double total = std::sqrt(cx * cx + cy * cy + cz * cz);
  if (total == 0.0) return 0.0;
  return std::sqrt(cy * cy + cz * cz) / total;
}

double PhysicalUnits::angular_frequency(double wavenumber_cm) {
  return 2.0 * std::numbers::pi * kSpeedOfLightCmPerS * wavenumber_cm;
}

double PhysicalUnits::wavenumber(double w) { return w / (2.0 * std::numbers::pi * kSpeedOfLightCmPerS); }

double PhysicalUnits::seconds(double t) { return t / (2.0 * std::numbers::pi * kSpeedOfLightCmPerS); }

double PhysicalUnits::natural_time(double s) { return s * (2.0 * std::numbers::pi * kSpeedOfLightCmPerS); }

}  // namespace zermelo::models
