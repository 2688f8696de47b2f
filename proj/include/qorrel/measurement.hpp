#pragma once

// Projective measurements on qutrit B in the three-vector basis
//   |V1> = e^{i chi1} sin(th) cos(ph)|0> + e^{i chi2} sin(th) sin(ph)|1> + cos(th)|2>
//   |V2> = e^{i chi1} cos(th) cos(ph)|0> + e^{i chi2} cos(th) sin(ph)|1> - sin(th)|2>
//   |V3> = -e^{i chi1} sin(ph)|0> + e^{i chi2} cos(ph)|1>
// and the conditional entropy of A they leave behind.

#include <array>
#include <tuple>

#include "qorrel/qmath.hpp"

namespace qorrel {

/// theta, phi in [0, pi/2]; chi1, chi2 in [0, 2 pi). Out-of-range values throw DomainError.
class MeasurementAngles {
 public:
  MeasurementAngles() = default;
  MeasurementAngles(double theta, double phi, double chi1, double chi2);

  /// Maps arbitrary reals into range: theta, phi reflected at 0 and pi/2, chi wrapped mod 2 pi.
  static MeasurementAngles folded(double theta, double phi, double chi1, double chi2);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  double chi1() const { return chi1_; }
  double chi2() const { return chi2_; }

  auto as_tuple() const { return std::tuple(theta_, phi_, chi1_, chi2_); }
  friend bool operator<(const MeasurementAngles& a, const MeasurementAngles& b) {
    return a.as_tuple() < b.as_tuple();
  }

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
  double chi1_ = 0.0;
  double chi2_ = 0.0;
};

double reflect_polar(double x);
double wrap_phase(double x);

using Vector3 = std::array<Complex, 3>;
using MeasurementBasis = std::array<Vector3, 3>;

MeasurementBasis measurement_basis(const MeasurementAngles& a);

/// Basis from raw angles with no range check (the formulas stay orthonormal).
MeasurementBasis measurement_basis_unchecked(double theta, double phi, double chi1, double chi2);

/// sum_k p_k S(rho_{A|k}) for the measurement {1 x |V_k><V_k|} on B, in bits.
/// Keeps a flat copy of rho so that repeated evaluation stays cheap.
class ConditionalEntropy {
 public:
  explicit ConditionalEntropy(const BipartiteDensityMatrix& rho);

  double operator()(const MeasurementAngles& a) const;
  double at(const MeasurementBasis& basis) const;

  /// Outcomes with probability below this contribute nothing.
  static constexpr double kMinProbability = 1e-12;

 private:
  std::array<Complex, 81> rho_{};
  std::array<Complex, 9> rho_a_{};
};

double conditional_entropy(const BipartiteDensityMatrix& rho, const MeasurementAngles& a);

}  // namespace qorrel
