#include "qorrel/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qorrel/error.hpp"

namespace qorrel {

MixtureWeights::MixtureWeights(double p0, double p1, double p2) : p_{p0, p1, p2} {
  for (double p : p_)
    if (!(p >= 0.0 && p <= 1.0))
      throw DomainError("mixture weight " + std::to_string(p) + " outside [0, 1]");
  if (std::abs(p0 + p1 + p2 - 1.0) > kSimplexTolerance)
    throw DomainError("mixture weights sum to " + std::to_string(p0 + p1 + p2));
}

MixtureWeights MixtureWeights::renormalized(double p0, double p1, double p2) {
  const double s = p0 + p1 + p2;
  if (std::abs(s - 1.0) > kRepairTolerance)
    throw DomainError("mixture weights sum to " + std::to_string(s) + ", too far to renormalize");
  return MixtureWeights(p0 / s, p1 / s, p2 / s);
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amp_(std::move(amplitudes)) {
  double n2 = 0.0;
  for (const Complex& a : amp_) n2 += std::norm(a);
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-12) throw DomainError("state vector is not normalized");
}

Complex inner_product(const StateVector& bra, const StateVector& ket) {
  if (bra.size() != ket.size()) throw DimensionError("inner product of vectors of different size");
  Complex s = 0.0;
  for (std::size_t i = 0; i < bra.size(); ++i) s += std::conj(bra[i]) * ket[i];
  return s;
}

ComplexMatrix qft_matrix(std::size_t d) {
  if (d < 2) throw DomainError("qft_matrix: dimension must be at least 2");
  ComplexMatrix f(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) {
      // reduce jk mod d first so the phase argument stays small
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % d) / static_cast<double>(d);
      f(k, j) = std::polar(norm, angle);
    }
  return f;
}

ComplexMatrix xor_gate(std::size_t d) {
  if (d < 2) throw DomainError("xor_gate: dimension must be at least 2");
  ComplexMatrix x(d * d, d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) x(j * d + (j + d - k) % d, j * d + k) = 1.0;
  return x;
}

StateVector bell_state(std::size_t j, std::size_t k, std::size_t d) {
  if (d < 2) throw DomainError("bell_state: dimension must be at least 2");
  if (j >= d || k >= d) throw DomainError("bell_state: index out of range");
  const ComplexMatrix u = xor_gate(d) * kron(qft_matrix(d), ComplexMatrix::identity(d));
  std::vector<Complex> amp(d * d);
  for (std::size_t r = 0; r < d * d; ++r) amp[r] = u(r, j * d + k);
  // |entries| are 1/sqrt(d) to rounding; renormalize so the 1e-12 norm check holds for any d
  double n2 = 0.0;
  for (const Complex& a : amp) n2 += std::norm(a);
  for (Complex& a : amp) a /= std::sqrt(n2);
  return StateVector(std::move(amp));
}

BipartiteDensityMatrix initial_state(const MixtureWeights& w) {
  ComplexMatrix rho(9, 9);
  for (std::size_t k = 0; k < 3; ++k) rho += w[k] * bell_state(0, k, 3).projector();
  return BipartiteDensityMatrix(std::move(rho));
}

}  // namespace qorrel
