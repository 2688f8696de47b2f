#pragma once

// Cyclic complex Jacobi for small dense Hermitian matrices.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>

#include "qorrel/error.hpp"

namespace qorrel::detail {

inline constexpr double kJacobiOffNormTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

inline double off_diagonal_norm(std::span<const std::complex<double>> a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a[i * n + j]);
  return std::sqrt(s);
}

/// Diagonalizes the row-major Hermitian matrix `a` in place and writes its
/// eigenvalues in ascending order to `w`. Only the Hermitian part is used.
/// Returns the number of sweeps taken.
inline int jacobi_eigenvalues(std::span<std::complex<double>> a, std::size_t n,
                              std::span<double> w) {
  using C = std::complex<double>;
  double scale = 0.0;
  for (const C& z : a) scale += std::norm(z);
  const double tol = kJacobiOffNormTolerance * std::max(1.0, std::sqrt(scale));

  const double skip = tol / static_cast<double>(n);
  int sweep = 0;
  for (; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) < tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const C h = a[p * n + q];
        const double ah = std::sqrt(std::norm(h));
        // entries below tol/n cannot keep the off-diagonal norm above tol
        if (ah < skip) continue;
        const C e = h / ah;  // phase of the coupling
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        const double theta = (aqq - app) / (2.0 * ah);
        double t;
        if (std::abs(theta) > 1e150)
          t = 0.5 / theta;
        else
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const C se = s * e;
        const C sec = s * std::conj(e);
        const C ce = c * std::conj(e);
        // columns: A <- A G
        for (std::size_t k = 0; k < n; ++k) {
          const C akp = a[k * n + p];
          const C akq = a[k * n + q];
          a[k * n + p] = c * akp - sec * akq;
          a[k * n + q] = s * akp + ce * akq;
        }
        // rows: A <- G^dagger A
        const C cec = c * e;
        for (std::size_t k = 0; k < n; ++k) {
          const C apk = a[p * n + k];
          const C aqk = a[q * n + k];
          a[p * n + k] = c * apk - se * aqk;
          a[q * n + k] = s * apk + cec * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        a[p * n + p] = app - t * ah;
        a[q * n + q] = aqq + t * ah;
      }
    }
  }
  if (sweep == kJacobiMaxSweeps && off_diagonal_norm(a, n) >= tol)
    throw NumericalError("Jacobi eigensolver did not converge in 100 sweeps");

  for (std::size_t i = 0; i < n; ++i) w[i] = a[i * n + i].real();
  std::sort(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
  return sweep;
}

}  // namespace qorrel::detail
