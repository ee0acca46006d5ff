// Copyright 2026 The mdiasym Authors
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

// Two-qubit concurrence, used to cross-check asymmetry against entanglement
// generation.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "mdiasym/linalg.hpp"
#include "mdiasym/model.hpp"

namespace mdiasym {

/// 2 |a d - b c| for amplitudes (a, b, c, d) in the standard basis.
inline double concurrence_pure(const StateVector& psi) {
  if (psi.cols() != 1 || psi.rows() != 4) {
    throw ShapeError("concurrence_pure: expected a 4-component column");
  }
  const double n = vector_norm(psi);
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw DomainError("concurrence_pure: state norm " + std::to_string(n) + " != 1");
  }
  return 2.0 * std::abs(psi(0, 0) * psi(3, 0) - psi(1, 0) * psi(2, 0));
}

/// Wootters concurrence max(0, l1 - l2 - l3 - l4). The l_i are the square
/// roots of the eigenvalues of rho (Y(x)Y) rho^* (Y(x)Y), obtained as the
/// singular values of sqrt(rho~) sqrt(rho) with rho~ the spin-flipped state.
inline double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw ShapeError("concurrence: expected a 4x4 state");
  }
  const ComplexMatrix yy = kron(pauli(2), pauli(2));
  const ComplexMatrix root = sqrt_psd(rho.matrix());
  const ComplexMatrix flipped_root = matmul(matmul(yy, conjugate(root)), yy);
  const std::vector<double> l = singular_values(matmul(flipped_root, root));
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

} // namespace mdiasym
