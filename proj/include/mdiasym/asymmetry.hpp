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

// Wigner-Yanase asymmetry with respect to the MDI Hamiltonian (global and
// local) and with respect to its unitary U_t. Each quantity has a generic
// matrix route and, where available, a closed-form route for the canonical
// Hamiltonian.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "mdiasym/errors.hpp"
#include "mdiasym/linalg.hpp"
#include "mdiasym/model.hpp"

namespace mdiasym {

/// 4 / (2 - (-1))^2, the normalization of the canonical Hamiltonian.
inline constexpr double kCanonicalNormalization = 4.0 / 9.0;

inline constexpr double kNegativeAsymmetryTolerance = 1e-12;

/// Skew information (`raw`, in units of squared Hamiltonian eigenvalues) and
/// the same value rescaled so that the maximum over states is 1.
struct AsymmetryValue {
  double raw = 0.0;
  double normalized = 0.0;
};

namespace detail {

inline double clamp_nonnegative(double v, const char* what) {
  if (v < -kNegativeAsymmetryTolerance) {
    throw NumericError(std::string(what) + ": negative result " + std::to_string(v));
  }
  return v < 0.0 ? 0.0 : v;
}

inline void require_two_qubit(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 4) {
    throw ShapeError(std::string(what) + ": expected a 4x4 state");
  }
}

inline void require_unit_range(double r, const char* what) {
  if (!(r >= -1.0 && r <= 1.0)) {
    throw DomainError(std::string(what) + ": parameter must lie in [-1, 1], got " + std::to_string(r));
  }
}

// Roots of expressions that are non-negative in exact arithmetic.
inline double safe_sqrt(double x) { return std::sqrt(x > 0.0 ? x : 0.0); }

} // namespace detail

// ---------------------------------------------------------------------------
// Generator asymmetry
// ---------------------------------------------------------------------------

/// tr(rho H^2) - tr(sqrt(rho) H sqrt(rho) H).
inline AsymmetryValue wy_asymmetry(const DensityMatrix& rho, const MdiHamiltonian& h) {
  detail::require_two_qubit(rho, "wy_asymmetry");
  const ComplexMatrix& hm = h.matrix();
  const ComplexMatrix root = sqrt_psd(rho.matrix());
  const double first = trace(matmul(rho.matrix(), matmul(hm, hm))).real();
  const ComplexMatrix rh = matmul(root, hm);
  const double second = trace(matmul(rh, rh)).real();
  const double raw = detail::clamp_nonnegative(first - second, "wy_asymmetry");
  return {raw, raw * h.normalization()};
}

/// Variance of H in a pure state, equal to the skew information of its
/// projector.
inline AsymmetryValue wy_asymmetry_pure(const StateVector& psi, const MdiHamiltonian& h) {
  if (psi.cols() != 1 || psi.rows() != 4) {
    throw ShapeError("wy_asymmetry_pure: expected a 4-component column");
  }
  const double n = vector_norm(psi);
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw DomainError("wy_asymmetry_pure: state norm " + std::to_string(n) + " != 1");
  }
  const StateVector hpsi = matmul(h.matrix(), psi);
  const double mean = inner(psi, hpsi).real();
  const double second = inner(hpsi, hpsi).real();
  const double raw = detail::clamp_nonnegative(second - mean * mean, "wy_asymmetry_pure");
  return {raw, raw * h.normalization()};
}

/// Normalized asymmetry of a pure product state, canonical Hamiltonian:
///
///   4/9 { 2X + Y - (X - Y)^2 },  X = (a_a b_b + b_a a_b)^2,
///                                Y = a_a^2 a_b^2 + b_a^2 b_b^2.
inline double closed_form_pure(const PureProductParams& p) {
  const double aa = std::cos(p.theta_a / 2.0);
  const double ba = std::sin(p.theta_a / 2.0);
  const double ab = std::cos(p.theta_b / 2.0);
  const double bb = std::sin(p.theta_b / 2.0);
  const double x = (aa * bb + ba * ab) * (aa * bb + ba * ab);
  const double y = aa * aa * ab * ab + ba * ba * bb * bb;
  return kCanonicalNormalization * (2.0 * x + y - (x - y) * (x - y));
}

/// Normalized asymmetry of the incoherent (Z) Bloch product family.
inline double closed_form_rho3(double r_a, double r_b) {
  detail::require_unit_range(r_a, "closed_form_rho3");
  detail::require_unit_range(r_b, "closed_form_rho3");
  return 2.0 * (1.0 - r_a * r_b - detail::safe_sqrt((1.0 - r_a * r_a) * (1.0 - r_b * r_b))) / 9.0;
}

/// Normalized asymmetry of the coherent (X) Bloch product family.
inline double closed_form_rho1(double r_a, double r_b) {
  detail::require_unit_range(r_a, "closed_form_rho1");
  detail::require_unit_range(r_b, "closed_form_rho1");
  return (5.0 + 4.0 * r_a * r_b - 5.0 * detail::safe_sqrt((1.0 - r_a * r_a) * (1.0 - r_b * r_b))) / 9.0;
}

// ---------------------------------------------------------------------------
// Local asymmetry
// ---------------------------------------------------------------------------

/// tr_other(rho) composed with the maximally mixed state of the traced-out
/// dipole, in the original tensor order.
inline DensityMatrix local_state(const DensityMatrix& rho, Subsystem which) {
  detail::require_two_qubit(rho, "local_state");
  const ComplexMatrix kept = partial_trace(rho.matrix(), which);
  const ComplexMatrix half = scale(ComplexMatrix::identity(2), 0.5);
  return DensityMatrix::unchecked(which == Subsystem::A ? kron(kept, half) : kron(half, kept));
}

/// Asymmetry of the local state of `which` after evolving rho0 for time t.
inline AsymmetryValue local_asymmetry(const DensityMatrix& rho0, const MdiHamiltonian& h, double t,
                                      Subsystem which) {
  return wy_asymmetry(local_state(evolve_density(rho0, h, t), which), h);
}

/// Local asymmetry of a one-dipole state with Bloch vector `r` (|r| <= 1),
/// canonical Hamiltonian. With sqrt(rho_1) = a I + b.sigma and
/// H = sum_k g_k sigma_k (x) sigma_k, g = (1/2, 1/2, -1):
///
///   raw = sum_k g_k^2 [1 - 2a^2 - 2(2 b_k^2 - |b|^2)].
///
/// The formula is symmetric under exchanging the dipoles, so it serves
/// either subsystem.
inline AsymmetryValue local_asymmetry_bloch(const std::array<double, 3>& r) {
  const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (len > 1.0 + 1e-9) {
    throw DomainError("local_asymmetry_bloch: Bloch vector longer than 1 (" + std::to_string(len) + ")");
  }
  const double up = std::sqrt(clamp_psd_eigenvalue((1.0 + std::min(len, 1.0)) / 2.0));
  const double down = std::sqrt(clamp_psd_eigenvalue((1.0 - std::min(len, 1.0)) / 2.0));
  const double a = (up + down) / 2.0;
  const double bmag = (up - down) / 2.0;
  std::array<double, 3> b{};
  if (len > 0.0) {
    for (std::size_t k = 0; k < 3; ++k) {
      b[k] = bmag * r[k] / len;
    }
  }
  const double b2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
  constexpr std::array<double, 3> g{0.5, 0.5, -1.0};
  double raw = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    raw += g[k] * g[k] * (1.0 - 2.0 * a * a - 2.0 * (2.0 * b[k] * b[k] - b2));
  }
  raw = detail::clamp_nonnegative(raw, "local_asymmetry_bloch");
  return {raw, raw * kCanonicalNormalization};
}

/// Bloch vector (tr(rho sigma_1), tr(rho sigma_2), tr(rho sigma_3)) of a 2x2 state.
inline std::array<double, 3> bloch_vector(const ComplexMatrix& rho1) {
  if (rho1.rows() != 2 || rho1.cols() != 2) {
    throw ShapeError("bloch_vector: expected a 2x2 matrix");
  }
  return {2.0 * rho1(0, 1).real(), -2.0 * rho1(0, 1).imag(), (rho1(0, 0) - rho1(1, 1)).real()};
}

/// Local asymmetry of a pure product initial state at time t, canonical
/// Hamiltonian, from the analytic reduced state. No eigendecomposition.
inline AsymmetryValue local_asymmetry_pure_closed(const PureProductParams& p, double t, Subsystem which) {
  return local_asymmetry_bloch(bloch_vector(reduced_state_pure_closed(p, t, which)));
}

/// Local asymmetry of dipole a for the X Bloch family, on the raw scale:
///
///   4 sqrt(A/5) = sqrt((r_a - r_b) cos t + (r_a + r_b) cos 3t + 2)
///               - sqrt((r_b - r_a) cos t - (r_a + r_b) cos 3t + 2),
///
/// evaluated as 5 (rhs / 4)^2. Multiply by kCanonicalNormalization for the
/// normalized scale.
inline double local_closed_form_rho1(double r_a, double r_b, double t) {
  detail::require_unit_range(r_a, "local_closed_form_rho1");
  detail::require_unit_range(r_b, "local_closed_form_rho1");
  const double u = (r_a - r_b) * std::cos(t);
  const double v = (r_a + r_b) * std::cos(3.0 * t);
  const double diff = detail::safe_sqrt(u + v + 2.0) - detail::safe_sqrt(-u - v + 2.0);
  return 5.0 * (diff / 4.0) * (diff / 4.0);
}

/// Local asymmetry of dipole a for the Z Bloch family, on the normalized
/// scale:
///
///   3 sqrt(A) = sqrt(1 - r_a + (r_a - r_b) sin^2 t) - sqrt(1 + r_a + (r_b - r_a) sin^2 t),
///
/// evaluated as rhs^2 / 9.
inline double local_closed_form_rho3(double r_a, double r_b, double t) {
  detail::require_unit_range(r_a, "local_closed_form_rho3");
  detail::require_unit_range(r_b, "local_closed_form_rho3");
  const double s2 = std::sin(t) * std::sin(t);
  const double diff = detail::safe_sqrt(1.0 - r_a + (r_a - r_b) * s2) - detail::safe_sqrt(1.0 + r_a + (r_b - r_a) * s2);
  return diff * diff / 9.0;
}

// ---------------------------------------------------------------------------
// Unitary asymmetry
// ---------------------------------------------------------------------------

inline constexpr double kUnitaryTolerance = 1e-9;

/// 1 - Re tr(sqrt(rho) U sqrt(rho) U^dagger); in [0, 1] for pure states and
/// [0, 2] in general.
inline double unitary_asymmetry(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw ShapeError("unitary_asymmetry: operator and state dimensions differ");
  }
  const double res = unitarity_residual(u);
  if (res > kUnitaryTolerance) {
    throw DomainError("unitary_asymmetry: operator is not unitary (residual " + std::to_string(res) + ")");
  }
  const ComplexMatrix root = sqrt_psd(rho.matrix());
  const Complex overlap = trace(matmul(matmul(root, u), matmul(root, adjoint(u))));
  if (std::abs(overlap.imag()) > 1e-10) {
    throw NumericError("unitary_asymmetry: trace has imaginary part " + std::to_string(overlap.imag()));
  }
  return detail::clamp_nonnegative(1.0 - overlap.real(), "unitary_asymmetry");
}

/// Unitary asymmetry of a pure product state under U_t of the canonical
/// Hamiltonian, from its Bell coefficients:
///
///   1 - [c1^2 + c2^2 cos 2t + (c3^2 + c4^2) cos t]^2 - [(c3^2 + c4^2) sin t - c2^2 sin 2t]^2.
inline double unitary_asymmetry_pure_closed(const PureProductParams& p, double t) {
  const BellCoefficients c = bell_coefficients(p);
  const double w1 = c.c1 * c.c1;
  const double w2 = c.c2 * c.c2;
  const double w34 = c.c3 * c.c3 + c.c4 * c.c4;
  const double re = w1 + w2 * std::cos(2.0 * t) + w34 * std::cos(t);
  const double im = w34 * std::sin(t) - w2 * std::sin(2.0 * t);
  return detail::clamp_nonnegative(1.0 - re * re - im * im, "unitary_asymmetry_pure_closed");
}

} // namespace mdiasym
