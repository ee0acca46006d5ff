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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "mdiasym/linalg.hpp"
#include "mdiasym/model.hpp"

namespace mdiasym::random {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline ComplexMatrix gaussian(Rng& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (auto& z : m.entries()) {
    const double re = n(rng);
    const double im = n(rng);
    z = {re, im};
  }
  return m;
}

inline ComplexMatrix hermitian(Rng& rng, std::size_t n) {
  const ComplexMatrix g = gaussian(rng, n, n);
  return scale(g + adjoint(g), 0.5);
}

/// G G^dagger / tr, full rank almost surely.
inline DensityMatrix density(Rng& rng, std::size_t n) {
  const ComplexMatrix g = gaussian(rng, n, n);
  const ComplexMatrix p = matmul(g, adjoint(g));
  return DensityMatrix::unchecked(scale(p, 1.0 / trace(p).real()));
}

inline StateVector state_vector(Rng& rng, std::size_t n) {
  const ComplexMatrix g = gaussian(rng, n, 1);
  return scale(g, 1.0 / vector_norm(g));
}

/// Haar-distributed unitary via Gram-Schmidt on a Gaussian matrix.
inline ComplexMatrix unitary(Rng& rng, std::size_t n) {
  ComplexMatrix q = gaussian(rng, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex d{};
      for (std::size_t i = 0; i < n; ++i) {
        d += std::conj(q(i, k)) * q(i, j);
      }
      for (std::size_t i = 0; i < n; ++i) {
        q(i, j) -= d * q(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      norm += std::norm(q(i, j));
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) {
      q(i, j) /= norm;
    }
  }
  return q;
}

inline PureProductParams pure_params(Rng& rng) {
  return {uniform(rng, 0.0, 2.0 * std::numbers::pi), uniform(rng, 0.0, 2.0 * std::numbers::pi)};
}

inline BlochProductParams bloch_params(Rng& rng) {
  const BlochAxis axis = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? BlochAxis::X : BlochAxis::Z;
  return {axis, uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
}

} // namespace mdiasym::random
