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

// Magnetic dipolar interaction (MDI) Hamiltonian for two spin-1/2 dipoles,
// the product-state families used as initial conditions, and their exact
// time evolution (hbar = 1, t in units of 1/D).

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "mdiasym/errors.hpp"
#include "mdiasym/linalg.hpp"

namespace mdiasym {

// ---------------------------------------------------------------------------
// Fixed operators and states
// ---------------------------------------------------------------------------

/// sigma_0 (identity) and the Pauli matrices sigma_1, sigma_2, sigma_3.
inline ComplexMatrix pauli(int k) {
  switch (k) {
  case 0:
    return ComplexMatrix::identity(2);
  case 1:
    return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  case 2:
    return ComplexMatrix::from_rows({{0.0, -kI}, {kI, 0.0}});
  case 3:
    return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  default:
    throw DomainError("pauli: index must be 0..3, got " + std::to_string(k));
  }
}

namespace bell {

inline StateVector psi_minus() {
  const double s = std::numbers::sqrt2 / 2.0;
  return StateVector::column({0.0, s, -s, 0.0});
}
inline StateVector psi_plus() {
  const double s = std::numbers::sqrt2 / 2.0;
  return StateVector::column({0.0, s, s, 0.0});
}
inline StateVector phi_minus() {
  const double s = std::numbers::sqrt2 / 2.0;
  return StateVector::column({s, 0.0, 0.0, -s});
}
inline StateVector phi_plus() {
  const double s = std::numbers::sqrt2 / 2.0;
  return StateVector::column({s, 0.0, 0.0, s});
}

} // namespace bell

// ---------------------------------------------------------------------------
// Density matrices
// ---------------------------------------------------------------------------

inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-9;

/// A validated 2x2 or 4x4 quantum state: Hermitian, unit trace, PSD.
class DensityMatrix {
public:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    if (!mat_.is_square() || (mat_.rows() != 2 && mat_.rows() != 4)) {
      throw ShapeError("DensityMatrix: expected a 2x2 or 4x4 matrix");
    }
    const double herm = hermiticity_residual(mat_);
    if (herm > kStateTolerance) {
      throw DomainError("DensityMatrix: not Hermitian (residual " + std::to_string(herm) + ")");
    }
    const Complex tr = trace(mat_);
    if (std::abs(tr - 1.0) > kStateTolerance) {
      throw DomainError("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
    }
    const EigenSystem eig = eigh(mat_);
    if (eig.eigenvalues.back() < -kStateTolerance) {
      throw DomainError("DensityMatrix: negative eigenvalue " + std::to_string(eig.eigenvalues.back()));
    }
  }

  /// Wraps a matrix produced by a validity-preserving map (unitary
  /// conjugation, partial trace, tensor product of states) without
  /// re-checking. The matrix is re-Hermitized.
  static DensityMatrix unchecked(const ComplexMatrix& m) {
    return DensityMatrix(scale(m + adjoint(m), 0.5), UncheckedTag{});
  }

  /// |psi><psi| for a normalized state vector.
  static DensityMatrix from_pure(const StateVector& psi) {
    if (psi.cols() != 1 || (psi.rows() != 2 && psi.rows() != 4)) {
      throw ShapeError("DensityMatrix::from_pure: expected a 2- or 4-component column");
    }
    const double n = vector_norm(psi);
    if (std::abs(n - 1.0) > kNormTolerance) {
      throw DomainError("DensityMatrix::from_pure: state norm " + std::to_string(n) + " != 1");
    }
    return unchecked(projector(psi));
  }

  static DensityMatrix maximally_mixed(std::size_t dim) {
    return unchecked(scale(ComplexMatrix::identity(dim), 1.0 / static_cast<double>(dim)));
  }

  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return mat_; }
  [[nodiscard]] std::size_t dim() const noexcept { return mat_.rows(); }

  /// tr(rho^2).
  [[nodiscard]] double purity() const { return trace(matmul(mat_, mat_)).real(); }

private:
  struct UncheckedTag {};
  DensityMatrix(ComplexMatrix m, UncheckedTag) : mat_(std::move(m)) {}

  ComplexMatrix mat_;
};

// ---------------------------------------------------------------------------
// Hamiltonian
// ---------------------------------------------------------------------------

using Axis3 = std::array<double, 3>;

inline constexpr Axis3 kZAxis{0.0, 0.0, 1.0};

/// The MDI Hamiltonian together with its cached eigensystem. Immutable.
class MdiHamiltonian {
public:
  [[nodiscard]] double coupling() const noexcept { return coupling_; }
  [[nodiscard]] const Axis3& axis() const noexcept { return axis_; }
  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return matrix_; }
  [[nodiscard]] const EigenSystem& eigensystem() const noexcept { return eig_; }

  /// lambda_max - lambda_min.
  [[nodiscard]] double spectral_span() const noexcept {
    return eig_.eigenvalues.front() - eig_.eigenvalues.back();
  }

  /// Factor mapping skew information to the normalized asymmetry,
  /// 4 / span^2 (4/9 for the canonical Hamiltonian). Zero when the
  /// spectrum is flat.
  [[nodiscard]] double normalization() const noexcept {
    const double span = spectral_span();
    return span > 0.0 ? 4.0 / (span * span) : 0.0;
  }

private:
  MdiHamiltonian(double coupling, Axis3 axis, ComplexMatrix matrix)
      : coupling_(coupling), axis_(axis), matrix_(std::move(matrix)), eig_(eigh(matrix_)) {}

  friend MdiHamiltonian build_hamiltonian(double coupling, const Axis3& axis);
  friend MdiHamiltonian canonical_hamiltonian();

  double coupling_;
  Axis3 axis_;
  ComplexMatrix matrix_;
  EigenSystem eig_;
};

/// (D/2) [ sigma_vec (x) sigma_vec - 3 (n.sigma) (x) (n.sigma) ].
///
/// The 1/2 makes D = 1, n = z reproduce canonical_hamiltonian() exactly.
inline MdiHamiltonian build_hamiltonian(double coupling, const Axis3& axis) {
  if (!std::isfinite(coupling)) {
    throw DomainError("build_hamiltonian: coupling must be finite");
  }
  const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-9) {
    throw DomainError("build_hamiltonian: axis must be a unit vector (norm " + std::to_string(norm) + ")");
  }
  ComplexMatrix n_sigma(2, 2);
  ComplexMatrix dot(4, 4);
  for (int k = 1; k <= 3; ++k) {
    const ComplexMatrix s = pauli(k);
    dot = dot + kron(s, s);
    n_sigma = n_sigma + scale(s, axis[static_cast<std::size_t>(k - 1)]);
  }
  ComplexMatrix m = scale(dot - scale(kron(n_sigma, n_sigma), 3.0), coupling / 2.0);
  return {coupling, axis, std::move(m)};
}

/// 2^{-1}(sigma_1 (x) sigma_1 + sigma_2 (x) sigma_2 - 2 sigma_3 (x) sigma_3):
/// eigenvalue 0 on |Psi->, 2 on |Psi+>, -1 on |Phi+-> (D = 1, n = z).
inline MdiHamiltonian canonical_hamiltonian() {
  ComplexMatrix m = scale(kron(pauli(1), pauli(1)) + kron(pauli(2), pauli(2)) -
                              scale(kron(pauli(3), pauli(3)), 2.0),
                          0.5);
  return {1.0, kZAxis, std::move(m)};
}

// ---------------------------------------------------------------------------
// Initial states
// ---------------------------------------------------------------------------

/// Pure product configuration on coaxial Bloch rings: each dipole is
/// cos(theta/2)|0> + sin(theta/2)|1>. Angles are radians, nominally [0, 2pi].
struct PureProductParams {
  double theta_a = 0.0;
  double theta_b = 0.0;
};

enum class BlochAxis { X = 1, Z = 3 };

/// Mixed product state 2^{-1}(1 + r_a sigma_j) (x) 2^{-1}(1 + r_b sigma_j).
struct BlochProductParams {
  BlochAxis axis = BlochAxis::Z;
  double r_a = 0.0;
  double r_b = 0.0;
};

inline StateVector pure_product_state(const PureProductParams& p) {
  const StateVector a = StateVector::column({std::cos(p.theta_a / 2.0), std::sin(p.theta_a / 2.0)});
  const StateVector b = StateVector::column({std::cos(p.theta_b / 2.0), std::sin(p.theta_b / 2.0)});
  return kron(a, b);
}

inline void require_bloch_component(double r, const char* what) {
  if (!(r >= -1.0 && r <= 1.0)) {
    throw DomainError(std::string(what) + ": Bloch component must lie in [-1, 1], got " + std::to_string(r));
  }
}

inline DensityMatrix bloch_product_state(const BlochProductParams& p) {
  require_bloch_component(p.r_a, "bloch_product_state");
  require_bloch_component(p.r_b, "bloch_product_state");
  const ComplexMatrix s = pauli(static_cast<int>(p.axis));
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const ComplexMatrix ra = scale(id + scale(s, p.r_a), 0.5);
  const ComplexMatrix rb = scale(id + scale(s, p.r_b), 0.5);
  return DensityMatrix::unchecked(kron(ra, rb));
}

// ---------------------------------------------------------------------------
// Dynamics
// ---------------------------------------------------------------------------

/// exp(-i H t) from the cached eigensystem.
inline ComplexMatrix unitary_at(const MdiHamiltonian& h, double t) {
  return spectral_apply(h.eigensystem(), [t](double lambda) { return std::exp(-kI * lambda * t); });
}

/// Closed-form evolved pure product state for the canonical Hamiltonian:
///
///   (a_a b_b cos t - i b_a a_b sin t)|01> + (b_a a_b cos t - i a_a b_b sin t)|10>
///     + e^{2it}(a_a a_b|00> + b_a b_b|11>)
///
/// with a = cos(theta/2), b = sin(theta/2). This equals e^{it} U_t psi; the
/// global phase is kept as written.
inline StateVector evolve_pure_closed(const PureProductParams& p, double t) {
  const double aa = std::cos(p.theta_a / 2.0);
  const double ba = std::sin(p.theta_a / 2.0);
  const double ab = std::cos(p.theta_b / 2.0);
  const double bb = std::sin(p.theta_b / 2.0);
  const double c = std::cos(t);
  const double s = std::sin(t);
  const Complex phase = std::exp(2.0 * kI * t);
  return StateVector::column({
      phase * (aa * ab),
      Complex{aa * bb * c, -ba * ab * s},
      Complex{ba * ab * c, -aa * bb * s},
      phase * (ba * bb),
  });
}

/// U rho U^dagger.
inline DensityMatrix evolve_density(const DensityMatrix& rho, const MdiHamiltonian& h, double t) {
  if (rho.dim() != 4) {
    throw ShapeError("evolve_density: expected a two-qubit state");
  }
  const ComplexMatrix u = unitary_at(h, t);
  return DensityMatrix::unchecked(matmul(matmul(u, rho.matrix()), adjoint(u)));
}

/// Closed-form evolution of the Bloch product families under the canonical
/// Hamiltonian (X family in the Bell basis, Z family in the standard basis).
inline DensityMatrix evolve_bloch_closed(const BlochProductParams& p, double t) {
  require_bloch_component(p.r_a, "evolve_bloch_closed");
  require_bloch_component(p.r_b, "evolve_bloch_closed");
  const double ra = p.r_a;
  const double rb = p.r_b;
  if (p.axis == BlochAxis::X) {
    const ComplexMatrix pm = bell::psi_minus();
    const ComplexMatrix pp = bell::psi_plus();
    const ComplexMatrix fm = bell::phi_minus();
    const ComplexMatrix fp = bell::phi_plus();
    ComplexMatrix m = scale(projector(pp) + projector(fp), 1.0 + ra * rb) +
                      scale(projector(pm) + projector(fm), 1.0 - ra * rb) +
                      scale(scale(outer(fp, pp), std::exp(3.0 * kI * t)) +
                                scale(outer(pp, fp), std::exp(-3.0 * kI * t)),
                            rb + ra) +
                      scale(scale(outer(fm, pm), std::exp(kI * t)) + scale(outer(pm, fm), std::exp(-kI * t)),
                            rb - ra);
    return DensityMatrix::unchecked(scale(m, 0.25));
  }
  const double d = ra - rb;
  const double c2 = std::cos(2.0 * t);
  const double s2 = std::sin(2.0 * t);
  ComplexMatrix m(4, 4);
  m(0, 0) = (1.0 + ra) * (1.0 + rb);
  m(1, 1) = 1.0 - ra * rb + d * c2;
  m(1, 2) = kI * d * s2;
  m(2, 1) = -kI * d * s2;
  m(2, 2) = 1.0 - ra * rb - d * c2;
  m(3, 3) = (1.0 - ra) * (1.0 - rb);
  return DensityMatrix::unchecked(scale(m, 0.25));
}

/// Reduced state of one dipole after evolving a pure product state under the
/// canonical Hamiltonian, written out from the amplitudes of
/// evolve_pure_closed. Subsystem B follows from A by exchanging the dipoles,
/// which commutes with the Hamiltonian.
inline ComplexMatrix reduced_state_pure_closed(const PureProductParams& p, double t, Subsystem keep) {
  const double ta = keep == Subsystem::A ? p.theta_a : p.theta_b;
  const double tb = keep == Subsystem::A ? p.theta_b : p.theta_a;
  const double aa = std::cos(ta / 2.0);
  const double ba = std::sin(ta / 2.0);
  const double ab = std::cos(tb / 2.0);
  const double bb = std::sin(tb / 2.0);
  const double c = std::cos(t);
  const double s = std::sin(t);
  const Complex ep = std::exp(2.0 * kI * t);
  const Complex em = std::exp(-2.0 * kI * t);

  ComplexMatrix r(2, 2);
  r(0, 0) = aa * aa * ab * ab + aa * aa * bb * bb * c * c + ba * ba * ab * ab * s * s;
  r(1, 1) = ba * ba * bb * bb + ba * ba * ab * ab * c * c + aa * aa * bb * bb * s * s;
  r(0, 1) = aa * ba * c * (ab * ab * ep + bb * bb * em) + kI * ab * bb * s * (aa * aa * ep - ba * ba * em);
  r(1, 0) = std::conj(r(0, 1));
  return r;
}

// ---------------------------------------------------------------------------
// Bell-basis coefficients
// ---------------------------------------------------------------------------

/// Amplitudes of a pure product state on (|Psi->, |Psi+>, |Phi->, |Phi+>).
struct BellCoefficients {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
};

inline BellCoefficients bell_coefficients(const PureProductParams& p) {
  const double ca = std::cos(p.theta_a / 2.0);
  const double sa = std::sin(p.theta_a / 2.0);
  const double cb = std::cos(p.theta_b / 2.0);
  const double sb = std::sin(p.theta_b / 2.0);
  const double k = std::numbers::sqrt2 / 2.0;
  return {k * (ca * sb - sa * cb), k * (ca * sb + sa * cb), k * (ca * cb - sa * sb), k * (ca * cb + sa * sb)};
}

/// c1|Psi-> + c2|Psi+> + c3|Phi-> + c4|Phi+>.
inline StateVector bell_superposition(const BellCoefficients& c) {
  return scale(bell::psi_minus(), c.c1) + scale(bell::psi_plus(), c.c2) + scale(bell::phi_minus(), c.c3) +
         scale(bell::phi_plus(), c.c4);
}

} // namespace mdiasym
