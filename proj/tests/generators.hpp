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


// Seeded generators for property tests.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "mdiasym/linalg.hpp"
#include "mdiasym/model.hpp"

namespace gen {

using mdiasym::Complex;
using mdiasym::ComplexMatrix;

inline constexpr int kCases = 200;

class Source {
public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }
  double unit() { return uniform(-1.0, 1.0); }
  double time() { return uniform(-10.0, 10.0); }

  ComplexMatrix ginibre(std::size_t r, std::size_t c) {
    std::normal_distribution<double> n;
    ComplexMatrix m(r, c);
    for (auto& z : m.entries()) {
      const double re = n(rng_);
      z = Complex{re, n(rng_)};
    }
    return m;
  }

  ComplexMatrix hermitian(std::size_t n) {
    const ComplexMatrix g = ginibre(n, n);
    return mdiasym::scale(g + mdiasym::adjoint(g), 0.5);
  }

  // Full-rank state G G^dagger / tr.
  ComplexMatrix density(std::size_t n) {
    const ComplexMatrix g = ginibre(n, n);
    const ComplexMatrix m = mdiasym::matmul(g, mdiasym::adjoint(g));
    return mdiasym::scale(m, 1.0 / mdiasym::trace(m).real());
  }

  ComplexMatrix state(std::size_t n) {
    const ComplexMatrix g = ginibre(n, 1);
    return mdiasym::scale(g, 1.0 / mdiasym::vector_norm(g));
  }

  mdiasym::PureProductParams pure() { return {angle(), angle()}; }

private:
  std::mt19937_64 rng_;
};

} // namespace gen
