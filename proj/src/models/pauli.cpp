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

#include "zermelo/error.hpp"
#include "zermelo/models.hpp"

namespace zermelo::models {

ComplexMatrix pauli(Pauli p) {
  const Complex i(0.0, 1.0);
  switch (p) {
    case Pauli::kI: return ComplexMatrix::identity(2);
    case Pauli::kX: return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case Pauli::kY: return ComplexMatrix::from_rows({{0.0, -i}, {i, 0.0}});
    case Pauli::kZ: return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  }
  throw Error("unknown Pauli index");
}

ComplexMatrix pauli_product(Pauli a, Pauli b) { return kron(pauli(a), pauli(b)); }

PauliDecomposition pauli_decompose(const HermitianOperator& h) {
  if (h.dim() != 4) throw DimensionError("pauli_decompose: operator must be 4x4");
  PauliDecomposition d;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      d.c[a][b] =
          std::real(trace_product(h.matrix(), pauli_product(static_cast<Pauli>(a), static_cast<Pauli>(b)))) / 4.0;
  return d;
}

HermitianOperator PauliDecomposition::reconstruct() const {
  ComplexMatrix m(4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      if (c[a][b] != 0.0) m += pauli_product(static_cast<Pauli>(a), static_cast<Pauli>(b)) * Complex(c[a][b], 0.0);
  return HermitianOperator::from_computed(m);
}

double PauliDecomposition::norm() const noexcept {
  double s = 0.0;
  for (const auto& row : c)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

double non_zeeman_weight(const PauliDecomposition& d) {
  const double total = d.norm();
  if (total == 0.0) return 0.0;
  PauliDecomposition rest = d;
  rest.c[static_cast<std::size_t>(Pauli::kZ)][static_cast<std::size_t>(Pauli::kI)] = 0.0;
  rest.c[static_cast<std::size_t>(Pauli::kI)][static_cast<std::size_t>(Pauli::kZ)] = 0.0;
  return rest.norm() / total;
}

}  // namespace zermelo::models
