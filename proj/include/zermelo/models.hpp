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

// Physical presets: the two-level oscillator, the Heisenberg two-qubit dimer
// with its Bell basis, quantized resource bounds that make the control a
// Zeeman term, and the Cu(II) acetate dimer with wavenumber units.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zermelo/linalg.hpp"
#include "zermelo/protocol.hpp"

namespace zermelo::models {

struct OscillatorPreset {
  double omega;
  double eps_f;  ///< 3ω/2

  explicit OscillatorPreset(double omega);
};

/// dim-2 truncation: H0 = diag(ω/2, 3ω/2), |0⟩ → |1⟩.
ZermeloProblem oscillator_problem(double omega, double k);

/// Couplings of H0 = −Σ_j J_j σ_j⊗σ_j.
struct DimerParams {
  double j_x = 0.0;
  double j_y = 0.0;
  double j_z = 0.0;

  double j_plus() const noexcept { return j_x + j_y; }
  double j_minus() const noexcept { return j_x - j_y; }
  void validate() const;
};

/// Computational basis |00⟩, |01⟩, |10⟩, |11⟩.
HermitianOperator dimer_h0(const DimerParams& params);

enum class Bell { kPhiPlus = 0, kPhiMinus = 1, kPhiBarPlus = 2, kPhiBarMinus = 3 };
std::string_view bell_name(Bell b);
Bell bell_from_name(std::string_view name);

/// |Φ₊⟩, |Φ₋⟩, |Φ̄₊⟩, |Φ̄₋⟩
std::array<StateVector, 4> bell_states();
StateVector bell_state(Bell b);

/// Eigenvalue of dimer_h0 on each Bell state.
double bell_energy(const DimerParams& params, Bell b);

/// H0 = dimer_h0, |Φ₊⟩ → |Φ₋⟩.
ZermeloProblem bell_swap_problem(const DimerParams& params, double k);

/// Bell-to-Bell flip between any two distinct Bell states.
ZermeloProblem spin_flip_problem(const DimerParams& params, Bell from, Bell to, double k);

/// ε_f for Φ₊ → Φ₋: −J_z + J_−.
double bell_swap_eps_f(const DimerParams& params);

/// ε_f² / (2(n + ½)²). Throws Error for ε_f = 0 or n < 0.
double quantized_k(double eps_f, int n);

/// π/√(2k)
double orthogonal_delta_t(double k);

struct QuantizationRow {
  int n;
  double k;
  double delta_t;
};

struct QuantizationTable {
  double eps_f;
  std::vector<QuantizationRow> rows;
};

/// Rows n = 0..n_max inclusive.
QuantizationTable quantization_table(double eps_f, int n_max);

enum class Pauli { kI = 0, kX = 1, kY = 2, kZ = 3 };

/// Coefficients c[a][b] of σ_a⊗σ_b, c = tr(h·σ_a⊗σ_b)/4.
struct PauliDecomposition {
  std::array<std::array<double, 4>, 4> c{};

  double operator()(Pauli a, Pauli b) const noexcept {
    return c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  HermitianOperator reconstruct() const;
  double norm() const noexcept;
};

ComplexMatrix pauli(Pauli p);
ComplexMatrix pauli_product(Pauli a, Pauli b);

/// Throws DimensionError unless dim = 4.
PauliDecomposition pauli_decompose(const HermitianOperator& h);

struct Realizability {
  bool realizable;
  int nearest_n;
  double deviation;
};

constexpr double kZeemanTolerance = 1e-9;

/// |cos(ε_f·π/√(2k))| ≤ tol.
Realizability zeeman_realizability(double eps_f, double k, double tol = kZeemanTolerance);

/// Relative weight of every Pauli term other than σz⊗I and I⊗σz.
double non_zeeman_weight(const PauliDecomposition& d);

/// Same test through the Pauli coefficients of a two-qubit control.
Realizability zeeman_realizability_pauli(const HermitianOperator& hc, double eps_f, double k,
                                         double tol = kZeemanTolerance);

/// Fraction of a dim-2 control not carried by σx, i.e. not a position
/// (a + a†) coupling; equals |cos(ε_f·π/√(2k))| on the oscillator.
double oscillator_momentum_weight(const HermitianOperator& hc);

struct PhysicalUnits {
  static constexpr double kSpeedOfLightCmPerS = 2.99792458e10;

  /// ω = 2πc·ν̃, rad/s
  static double angular_frequency(double wavenumber_cm);
  static double wavenumber(double angular_frequency_rad_s);
  /// Energies in cm⁻¹ with ħ = 1 put time in units of 1/(2πc·cm⁻¹).
  static double seconds(double natural_time);
  static double natural_time(double seconds);
};

struct CuAcetatePreset {
  double g_z;
  std::array<double, 3> raw_cm;  ///< J_x, J_y, J_z as measured, cm⁻¹
  DimerParams params;            ///< raw / (−4)
  double expected_delta_t_ps;
};

CuAcetatePreset cu_acetate_preset();

}  // namespace zermelo::models
