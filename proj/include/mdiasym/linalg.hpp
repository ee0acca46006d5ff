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

// Dense complex matrices at two-qubit scale (2x2 and 4x4): arithmetic,
// tensor products, partial traces and a Jacobi Hermitian eigensolver.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdiasym/errors.hpp"

namespace mdiasym {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Row-major dense complex matrix. Entries are always finite.
class ComplexMatrix {
public:
  ComplexMatrix() = default;

  /// Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw ShapeError("ComplexMatrix: dimensions must be positive");
    }
  }

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
      throw ShapeError("ComplexMatrix: dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
      throw ShapeError("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                       " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (!is_finite()) {
      throw DomainError("ComplexMatrix: non-finite entry");
    }
  }

  /// Builds a matrix from nested row lists: `from_rows({{1, 0}, {0, 1}})`.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Complex> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) {
        throw ShapeError("ComplexMatrix::from_rows: ragged rows");
      }
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return {r, c, std::move(entries)};
  }

  /// Column vector with the given amplitudes.
  static ComplexMatrix column(std::initializer_list<Complex> amplitudes) {
    return {amplitudes.size(), 1, std::vector<Complex>(amplitudes)};
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1.0;
    }
    return m;
  }

  static ComplexMatrix diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
      m(i, i) = diag[i];
    }
    return m;
  }

  /// Standard basis column |index> of length `dim`.
  static ComplexMatrix basis(std::size_t dim, std::size_t index) {
    ComplexMatrix m(dim, 1);
    m(index, 0) = 1.0;
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] std::span<const Complex> entries() const noexcept { return data_; }
  [[nodiscard]] std::span<Complex> entries() noexcept { return data_; }

  [[nodiscard]] bool is_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

using StateVector = ComplexMatrix;

namespace detail {

inline void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

inline void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw ShapeError(std::string(op) + ": matrix is not square");
  }
}

} // namespace detail

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

/// Entrywise complex conjugate (not the adjoint).
inline ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& z : out.entries()) {
    z = std::conj(z);
  }
  return out;
}

inline Complex trace(const ComplexMatrix& a) {
  detail::require_square(a, "trace");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    t += a(i, i);
  }
  return t;
}

inline ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_shape(a, b, "add");
  ComplexMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] += src[i];
  }
  return out;
}

inline ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_shape(a, b, "sub");
  ComplexMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] -= src[i];
  }
  return out;
}

inline ComplexMatrix scale(const ComplexMatrix& a, Complex s) {
  ComplexMatrix out = a;
  for (auto& z : out.entries()) {
    z *= s;
  }
  return out;
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return add(a, b); }
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return sub(a, b); }
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }
inline ComplexMatrix operator*(Complex s, const ComplexMatrix& a) { return scale(a, s); }
inline ComplexMatrix operator*(const ComplexMatrix& a, Complex s) { return scale(a, s); }

/// ab - ba.
inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_square(a, "commutator");
  detail::require_same_shape(a, b, "commutator");
  return matmul(a, b) - matmul(b, a);
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

/// ||a - b||_F.
inline double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_shape(a, b, "distance");
  double s = 0.0;
  auto x = a.entries();
  auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += std::norm(x[i] - y[i]);
  }
  return std::sqrt(s);
}

/// ||a - a^dagger||_F.
inline double hermiticity_residual(const ComplexMatrix& a) {
  detail::require_square(a, "hermiticity_residual");
  return distance(a, adjoint(a));
}

/// ||u^dagger u - I||_F.
inline double unitarity_residual(const ComplexMatrix& u) {
  detail::require_square(u, "unitarity_residual");
  return distance(matmul(adjoint(u), u), ComplexMatrix::identity(u.rows()));
}

/// <a|b> for column vectors.
inline Complex inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != 1 || b.cols() != 1 || a.rows() != b.rows()) {
    throw ShapeError("inner: operands must be column vectors of equal length");
  }
  Complex s{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += std::conj(a(i, 0)) * b(i, 0);
  }
  return s;
}

/// |a><b| for column vectors.
inline ComplexMatrix outer(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != 1 || b.cols() != 1) {
    throw ShapeError("outer: operands must be column vectors");
  }
  ComplexMatrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      out(i, j) = a(i, 0) * std::conj(b(j, 0));
    }
  }
  return out;
}

/// |psi><psi|.
inline ComplexMatrix projector(const ComplexMatrix& psi) { return outer(psi, psi); }

inline double vector_norm(const ComplexMatrix& psi) { return frobenius_norm(psi); }

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition
// ---------------------------------------------------------------------------

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kJacobiOffDiagonalThreshold = 1e-13;
inline constexpr int kJacobiMaxSweeps = 60;

/// Eigenvalues sorted descending; column k of `eigenvectors` pairs with
/// eigenvalue k. Within a degenerate cluster, columns are ordered by the
/// index of their dominant basis component, and that component is made
/// real and positive.
struct EigenSystem {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) {
        s += std::norm(a(i, j));
      }
    }
  }
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p, q), applied as a <- J^H a J
// and v <- v J.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) {
    return;
  }
  const Complex w = apq / r;
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(w);
  const Complex jqq = c * std::conj(w);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

inline std::size_t dominant_component(const ComplexMatrix& v, std::size_t col) {
  double best = -1.0;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    best = std::max(best, std::abs(v(i, col)));
  }
  for (std::size_t i = 0; i < v.rows(); ++i) {
    if (std::abs(v(i, col)) >= best - 1e-12) {
      return i;
    }
  }
  return 0;
}

} // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. The input is symmetrized as (a + a^H)/2 first.
inline EigenSystem eigh(const ComplexMatrix& input) {
  detail::require_square(input, "eigh");
  const double herm = hermiticity_residual(input);
  if (herm > kHermitianTolerance) {
    throw DomainError("eigh: matrix is not Hermitian (residual " + std::to_string(herm) + ")");
  }
  ComplexMatrix a = scale(input + adjoint(input), 0.5);
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kJacobiOffDiagonalThreshold * std::max(1.0, frobenius_norm(a));

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kJacobiMaxSweeps) {
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        detail::jacobi_rotate(a, v, p, q);
      }
    }
  }
  if (!converged) {
    throw NumericError("eigh: Jacobi iteration did not converge in " +
                       std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  // Re-order each near-degenerate run by dominant basis index.
  const double tie = 1e-12 * std::max(1.0, frobenius_norm(a));
  for (std::size_t begin = 0; begin < n;) {
    std::size_t end = begin + 1;
    while (end < n && a(order[end - 1], order[end - 1]).real() - a(order[end], order[end]).real() <= tie) {
      ++end;
    }
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(begin),
                     order.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](std::size_t x, std::size_t y) {
                       return detail::dominant_component(v, x) < detail::dominant_component(v, y);
                     });
    begin = end;
  }

  EigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues[k] = a(src, src).real();
    const std::size_t dom = detail::dominant_component(v, src);
    const double mag = std::abs(v(dom, src));
    const Complex phase = mag > 0.0 ? std::conj(v(dom, src)) / mag : Complex{1.0};
    for (std::size_t i = 0; i < n; ++i) {
      out.eigenvectors(i, k) = v(i, src) * phase;
    }
  }
  return out;
}

/// V f(Lambda) V^H for a callable f: double -> Complex.
template <class F>
ComplexMatrix spectral_apply(const EigenSystem& eig, F&& f) {
  const std::size_t n = eig.eigenvalues.size();
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex fk = f(eig.eigenvalues[k]);
    if (fk == Complex{}) {
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = v(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += vik * std::conj(v(j, k));
      }
    }
  }
  return out;
}

/// Eigenvalues below this magnitude are treated as exact zeros by the PSD
/// square root. Computed spectra of rank-deficient states carry O(1e-16)
/// noise whose square roots would otherwise leak O(1e-8) into traces.
inline constexpr double kZeroEigenvalueFloor = 1e-14;
inline constexpr double kNegativeEigenvalueTolerance = 1e-10;

/// Clamps one eigenvalue of a nominally PSD matrix. Throws NotPsdError below
/// -kNegativeEigenvalueTolerance.
inline double clamp_psd_eigenvalue(double lambda) {
  if (lambda < -kNegativeEigenvalueTolerance) {
    throw NotPsdError("matrix has eigenvalue " + std::to_string(lambda) + " < -1e-10");
  }
  return lambda <= kZeroEigenvalueFloor ? 0.0 : lambda;
}

/// Principal square root of a positive semidefinite Hermitian matrix.
inline ComplexMatrix sqrt_psd(const ComplexMatrix& rho) {
  const EigenSystem eig = eigh(rho);
  ComplexMatrix root =
      spectral_apply(eig, [](double lambda) { return Complex{std::sqrt(clamp_psd_eigenvalue(lambda))}; });
  return scale(root + adjoint(root), 0.5);
}

/// Singular values, descending, by one-sided (Hestenes) Jacobi rotations on
/// the columns. Small singular values keep O(eps ||a||) absolute accuracy,
/// unlike square roots of eigenvalues of a^H a.
inline std::vector<double> singular_values(const ComplexMatrix& input) {
  ComplexMatrix a = input;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  auto column_dot = [&](std::size_t p, std::size_t q) {
    Complex s{};
    for (std::size_t i = 0; i < m; ++i) {
      s += std::conj(a(i, p)) * a(i, q);
    }
    return s;
  };
  // Coupling below (1e-15 ||a||)^2 perturbs singular values by at most
  // ~1e-15 ||a||, and lets pure round-off columns settle.
  const double floor = std::pow(1e-15 * frobenius_norm(a), 2);
  bool converged = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = column_dot(p, p).real();
        const double beta = column_dot(q, q).real();
        const Complex gamma = column_dot(p, q);
        const double g = std::abs(gamma);
        if (g <= 1e-15 * std::sqrt(alpha * beta) || g <= floor) {
          continue;
        }
        converged = false;
        const Complex phase = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const Complex ap = a(i, p);
          const Complex aq = a(i, q) * std::conj(phase);
          a(i, p) = c * ap - s * aq;
          a(i, q) = s * ap + c * aq;
        }
      }
    }
  }
  if (!converged) {
    throw NumericError("singular_values: one-sided Jacobi did not converge");
  }
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = std::sqrt(column_dot(k, k).real());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// ---------------------------------------------------------------------------
// Two-qubit partial trace
// ---------------------------------------------------------------------------

enum class Subsystem { A, B };

inline Subsystem other(Subsystem s) noexcept { return s == Subsystem::A ? Subsystem::B : Subsystem::A; }

/// Reduces a 4x4 two-qubit operator (basis |xy> at index 2x + y) to the
/// 2x2 operator of the kept subsystem.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw ShapeError("partial_trace: expected a 4x4 matrix");
  }
  ComplexMatrix out(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < 2; ++k) {
        s += keep == Subsystem::A ? rho(2 * i + k, 2 * j + k) : rho(2 * k + i, 2 * k + j);
      }
      out(i, j) = s;
    }
  }
  return out;
}

} // namespace mdiasym
