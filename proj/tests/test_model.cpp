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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "mdiasym/model.hpp"
#include "oracle.hpp"

namespace {

using namespace mdiasym;
constexpr double kPi = std::numbers::pi;

TEST(Hamiltonian, CanonicalMatchesHandWrittenMatrix) {
  EXPECT_LT(distance(canonical_hamiltonian().matrix(), oracle::hamiltonian()), 1e-15);
  EXPECT_LT(distance(build_hamiltonian(1.0, kZAxis).matrix(), oracle::hamiltonian()), 1e-15);
}

TEST(Hamiltonian, BellEigenvectors) {
  const ComplexMatrix h = oracle::hamiltonian();
  EXPECT_LT(distance(matmul(h, bell::psi_plus()), scale(bell::psi_plus(), 2.0)), 1e-15);
  EXPECT_LT(vector_norm(matmul(h, bell::psi_minus())), 1e-15);
  EXPECT_LT(distance(matmul(h, bell::phi_plus()), scale(bell::phi_plus(), -1.0)), 1e-15);
  EXPECT_LT(distance(matmul(h, bell::phi_minus()), scale(bell::phi_minus(), -1.0)), 1e-15);
}

TEST(Hamiltonian, SpanAndNormalization) {
  const MdiHamiltonian h = canonical_hamiltonian();
  EXPECT_NEAR(h.spectral_span(), 3.0, 1e-13);
  EXPECT_NEAR(h.normalization(), 4.0 / 9.0, 1e-13);
  EXPECT_EQ(build_hamiltonian(0.0, kZAxis).normalization(), 0.0);
}

TEST(Hamiltonian, RejectsBadInput) {
  EXPECT_THROW(build_hamiltonian(1.0, {0.0, 0.0, 2.0}), DomainError);
  EXPECT_THROW(build_hamiltonian(std::nan(""), kZAxis), DomainError);
  EXPECT_THROW(pauli(4), DomainError);
}

TEST(Hamiltonian, SpectrumIsAxisIndependentProperty) {
  gen::Source src(21);
  for (int c = 0; c < 50; ++c) {
    const ComplexMatrix v = src.ginibre(3, 1);
    double n[3] = {v(0, 0).real(), v(1, 0).real(), v(2, 0).real()};
    const double len = std::hypot(n[0], n[1], n[2]);
    const double d = src.uniform(0.1, 3.0);
    const MdiHamiltonian h = build_hamiltonian(d, {n[0] / len, n[1] / len, n[2] / len});
    const double expect[4] = {2.0, 0.0, -1.0, -1.0};
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_NEAR(h.eigensystem().eigenvalues[k], d * expect[k], 1e-12);
    }
    EXPECT_LT(hermiticity_residual(h.matrix()), 1e-14);
  }
}

TEST(States, ProductExamples) {
  EXPECT_LT(distance(pure_product_state({0.0, 0.0}), ComplexMatrix::basis(4, 0)), 1e-15);
  EXPECT_LT(distance(pure_product_state({kPi, 0.0}), ComplexMatrix::basis(4, 2)), 1e-15);
  EXPECT_LT(distance(pure_product_state({0.0, kPi}), ComplexMatrix::basis(4, 1)), 1e-15);
}

TEST(States, BlochProductExamples) {
  const DensityMatrix z = bloch_product_state({BlochAxis::Z, 1.0, -1.0});
  EXPECT_LT(distance(z.matrix(), projector(ComplexMatrix::basis(4, 1))), 1e-15);
  const DensityMatrix x = bloch_product_state({BlochAxis::X, 0.0, 0.0});
  EXPECT_LT(distance(x.matrix(), DensityMatrix::maximally_mixed(4).matrix()), 1e-15);
  EXPECT_THROW(bloch_product_state({BlochAxis::Z, 1.2, 0.0}), DomainError);
  EXPECT_THROW(bloch_product_state({BlochAxis::X, 0.0, -1.0001}), DomainError);
}

TEST(States, DensityValidation) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(4)), DomainError);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(3)), ShapeError);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::from_rows({{1.5, 0.0}, {0.0, -0.5}})), DomainError);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::from_rows({{0.5, 1.0}, {0.0, 0.5}})), DomainError);
  EXPECT_THROW(DensityMatrix::from_pure(ComplexMatrix::column({1.0, 1.0})), DomainError);
  EXPECT_NEAR(DensityMatrix::maximally_mixed(4).purity(), 0.25, 1e-15);
}

TEST(Evolution, UnitaryExamples) {
  const MdiHamiltonian h = canonical_hamiltonian();
  EXPECT_LT(distance(unitary_at(h, 0.0), ComplexMatrix::identity(4)), 1e-14);
  EXPECT_LT(distance(unitary_at(h, 2.0 * kPi), ComplexMatrix::identity(4)), 1e-13);
  EXPECT_LT(distance(matmul(unitary_at(h, kPi / 2.0), bell::psi_minus()), bell::psi_minus()), 1e-14);
}

TEST(Evolution, UnitaryMatchesTaylorPropagatorProperty) {
  gen::Source src(22);
  const MdiHamiltonian h = canonical_hamiltonian();
  for (int c = 0; c < gen::kCases; ++c) {
    const double t = src.time();
    const ComplexMatrix u = unitary_at(h, t);
    EXPECT_LT(distance(u, oracle::propagator(t)), 1e-11);
    EXPECT_LT(unitarity_residual(u), 1e-12);
  }
}

TEST(Evolution, PureClosedFormIsPropagatorUpToGlobalPhase) {
  gen::Source src(23);
  for (int c = 0; c < gen::kCases; ++c) {
    const PureProductParams p = src.pure();
    const double t = src.time();
    const ComplexMatrix closed = scale(evolve_pure_closed(p, t), std::exp(-kI * t));
    const ComplexMatrix ref = matmul(oracle::propagator(t), oracle::product(p.theta_a, p.theta_b));
    EXPECT_LT(distance(closed, ref), 1e-11);
  }
}

TEST(Evolution, BlochClosedFormsMatchConjugation) {
  gen::Source src(24);
  for (int c = 0; c < gen::kCases; ++c) {
    const BlochAxis axis = c % 2 == 0 ? BlochAxis::Z : BlochAxis::X;
    const BlochProductParams p{axis, src.unit(), src.unit()};
    const double t = src.time();
    const int j = static_cast<int>(axis);
    const ComplexMatrix rho0 = kron(oracle::bloch_qubit(j, p.r_a), oracle::bloch_qubit(j, p.r_b));
    const ComplexMatrix u = oracle::propagator(t);
    const ComplexMatrix ref = matmul(matmul(u, rho0), adjoint(u));
    EXPECT_LT(distance(evolve_bloch_closed(p, t).matrix(), ref), 1e-11);
    EXPECT_LT(distance(evolve_density(bloch_product_state(p), canonical_hamiltonian(), t).matrix(), ref), 1e-11);
  }
}

TEST(Evolution, ReducedStateClosedFormMatchesPartialTrace) {
  gen::Source src(25);
  for (int c = 0; c < gen::kCases; ++c) {
    const PureProductParams p = src.pure();
    const double t = src.time();
    const ComplexMatrix psi = matmul(oracle::propagator(t), oracle::product(p.theta_a, p.theta_b));
    const ComplexMatrix rho = projector(psi);
    EXPECT_LT(distance(reduced_state_pure_closed(p, t, Subsystem::A), partial_trace(rho, Subsystem::A)), 1e-11);
    EXPECT_LT(distance(reduced_state_pure_closed(p, t, Subsystem::B), partial_trace(rho, Subsystem::B)), 1e-11);
  }
}

TEST(Bell, CoefficientExamples) {
  const double k = std::numbers::sqrt2 / 2.0;
  const BellCoefficients c00 = bell_coefficients({0.0, 0.0});
  EXPECT_NEAR(c00.c1, 0.0, 1e-15);
  EXPECT_NEAR(c00.c2, 0.0, 1e-15);
  EXPECT_NEAR(c00.c3, k, 1e-15);
  EXPECT_NEAR(c00.c4, k, 1e-15);
  const BellCoefficients c01 = bell_coefficients({0.0, kPi});
  EXPECT_NEAR(c01.c1, k, 1e-15);
  EXPECT_NEAR(c01.c2, k, 1e-15);
  EXPECT_NEAR(c01.c3, 0.0, 1e-15);
}

TEST(Bell, SuperpositionReproducesProductProperty) {
  gen::Source src(26);
  for (int c = 0; c < gen::kCases; ++c) {
    const PureProductParams p = src.pure();
    const BellCoefficients b = bell_coefficients(p);
    EXPECT_NEAR(b.c1 * b.c1 + b.c2 * b.c2 + b.c3 * b.c3 + b.c4 * b.c4, 1.0, 1e-14);
    EXPECT_LT(distance(bell_superposition(b), oracle::product(p.theta_a, p.theta_b)), 1e-14);
  }
}

} // namespace
