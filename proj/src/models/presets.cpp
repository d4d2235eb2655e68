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

#include <cmath>
#include <sstream>

#include "zermelo/error.hpp"
#include "zermelo/models.hpp"

namespace zermelo::models {

namespace {

ComplexVector bell_amplitudes(Bell b) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (b) {
    case Bell::kPhiPlus: return {s, 0.0, 0.0, s};
    case Bell::kPhiMinus: return {s, 0.0, 0.0, -s};
    case Bell::kPhiBarPlus: return {0.0, s, s, 0.0};
    case Bell::kPhiBarMinus: return {0.0, s, -s, 0.0};
  }
  throw Error("unknown Bell state");
}

}  // namespace

OscillatorPreset::OscillatorPreset(double w) : omega(w), eps_f(1.5 * w) {
  if (!(w > 0.0) || !std::isfinite(w)) throw Error("oscillator: omega must be positive and finite");
}

ZermeloProblem oscillator_problem(double omega, double k) {
  const OscillatorPreset o(omega);
  const Complex diag[] = {0.5 * o.omega, o.eps_f};
  return ZermeloProblem(HermitianOperator(ComplexMatrix::diagonal(diag)), StateVector::basis(2, 0),
                        StateVector::basis(2, 1), k);
}

void DimerParams::validate() const {
  if (!std::isfinite(j_x) || !std::isfinite(j_y) || !std::isfinite(j_z))
    throw Error("dimer couplings must be finite");
}

HermitianOperator dimer_h0(const DimerParams& p) {
  p.validate();
  const double jz = p.j_z, jp = p.j_plus(), jm = p.j_minus();
  return HermitianOperator(ComplexMatrix::from_rows({
      {-jz, 0.0, 0.0, -jm},
      {0.0, jz, -jp, 0.0},
      {0.0, -jp, jz, 0.0},
      {-jm, 0.0, 0.0, -jz},
  }));
}

std::string_view bell_name(Bell b) {
  switch (b) {
    case Bell::kPhiPlus: return "phi+";
    case Bell::kPhiMinus: return "phi-";
    case Bell::kPhiBarPlus: return "phibar+";
    case Bell::kPhiBarMinus: return "phibar-";
  }
  return "?";
}

Bell bell_from_name(std::string_view name) {
  for (Bell b : {Bell::kPhiPlus, Bell::kPhiMinus, Bell::kPhiBarPlus, Bell::kPhiBarMinus})
    if (bell_name(b) == name) return b;
  std::ostringstream os;
  os << "unknown Bell state '" << name << "' (expected phi+, phi-, phibar+ or phibar-)";
  throw ConfigError(os.str());
}

std::array<StateVector, 4> bell_states() {
  return {StateVector(bell_amplitudes(Bell::kPhiPlus)), StateVector(bell_amplitudes(Bell::kPhiMinus)),
          StateVector(bell_amplitudes(Bell::kPhiBarPlus)), StateVector(bell_amplitudes(Bell::kPhiBarMinus))};
}

StateVector bell_state(Bell b) { return StateVector(bell_amplitudes(b)); }

double bell_energy(const DimerParams& p, Bell b) {
  switch (b) {
    case Bell::kPhiPlus: return -(p.j_z + p.j_minus());
    case Bell::kPhiMinus: return -(p.j_z - p.j_minus());
    case Bell::kPhiBarPlus: return p.j_z - p.j_plus();
    case Bell::kPhiBarMinus: return p.j_z + p.j_plus();
  }
  throw Error("unknown Bell state");
}

ZermeloProblem bell_swap_problem(const DimerParams& params, double k) {
  return spin_flip_problem(params, Bell::kPhiPlus, Bell::kPhiMinus, k);
}

ZermeloProblem spin_flip_problem(const DimerParams& params, Bell from, Bell to, double k) {
  if (from == to) throw Error("spin flip needs two distinct Bell states");
  return ZermeloProblem(dimer_h0(params), bell_state(from), bell_state(to), k);
}

double bell_swap_eps_f(const DimerParams& p) { return -p.j_z + p.j_minus(); }

CuAcetatePreset cu_acetate_preset() {
  CuAcetatePreset c;
  c.g_z = 2.43;
  c.raw_cm = {297.793, 297.753, 298.453};
  c.params = DimerParams{c.raw_cm[0] / -4.0, c.raw_cm[1] / -4.0, c.raw_cm[2] / -4.0};
  c.expected_delta_t_ps = 0.2;
  return c;
}

}  // namespace zermelo::models
