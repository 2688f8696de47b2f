#pragma once

// Generalized Bell states and the incoherent Bell mixture used as initial state.

#include <array>
#include <cstddef>
#include <vector>

#include "qorrel/qmath.hpp"

namespace qorrel {

/// Weights (p0, p1, p2) of the mixture p0|phi00><phi00| + p1|phi01><phi01| + p2|phi02><phi02|.
class MixtureWeights {
 public:
  static constexpr double kSimplexTolerance = 1e-9;
  static constexpr double kRepairTolerance = 1e-6;

  /// Each p in [0, 1], sum 1 within 1e-9; otherwise DomainError.
  MixtureWeights(double p0, double p1, double p2);

  /// Accepts a sum within 1e-6 of 1 and rescales it onto the simplex.
  static MixtureWeights renormalized(double p0, double p1, double p2);

  double p0() const { return p_[0]; }
  double p1() const { return p_[1]; }
  double p2() const { return p_[2]; }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::array<double, 3>& values() const { return p_; }

 private:
  std::array<double, 3> p_;
};

/// Unit-norm pure state (norm checked to 1e-12).
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);

  const std::vector<Complex>& amplitudes() const { return amp_; }
  const Complex& operator[](std::size_t i) const { return amp_[i]; }
  std::size_t size() const { return amp_.size(); }
  ComplexMatrix projector() const { return ComplexMatrix::projector(amp_); }

 private:
  std::vector<Complex> amp_;
};

Complex inner_product(const StateVector& bra, const StateVector& ket);

/// d x d discrete Fourier transform, entry (k, j) = exp(2 pi i j k / d) / sqrt(d).
ComplexMatrix qft_matrix(std::size_t d);

/// d^2 x d^2 permutation |j>|k> -> |j>|(j - k) mod d>.
ComplexMatrix xor_gate(std::size_t d);

/// X_12 (F x 1) |j>|k>.
StateVector bell_state(std::size_t j, std::size_t k, std::size_t d);

BipartiteDensityMatrix initial_state(const MixtureWeights& w);

}  // namespace qorrel
