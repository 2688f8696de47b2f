#pragma once

// Two qutrits under independent dephasing reservoirs with Ornstein-Uhlenbeck
// memory. The closed-form element-wise propagator is authoritative; the
// master-equation integrator exists as an independent check on it.

#include <optional>

#include "qorrel/qmath.hpp"

namespace qorrel {

/// Per-subsystem reservoir: decay rate Gamma and inverse correlation time gamma.
class ReservoirParams {
 public:
  /// Both rates must be positive and finite (DomainError otherwise).
  ReservoirParams(double decay_rate, double bandwidth);

  double decay_rate() const { return decay_; }
  double bandwidth() const { return bandwidth_; }
  /// -gamma/2
  double beta() const { return -0.5 * bandwidth_; }
  /// (Gamma - gamma/2) gamma/2; negative in the overdamped (Markov-like) regime.
  double eta_squared() const { return (decay_ - 0.5 * bandwidth_) * 0.5 * bandwidth_; }

 private:
  double decay_;
  double bandwidth_;
};

/// Coherence damping factor P(t) = e^{beta t} (cos(eta t) - (beta/eta) sin(eta t)),
/// continued to the hyperbolic branch when eta^2 < 0 and to its series form
/// when |eta^2| t^2 < 1e-8. P(0) = 1, |P| <= 1.
double decoherence_factor(const ReservoirParams& r, double t);

/// Time-dependent dephasing rate -2 dP/dt / P for which the master equation
/// reproduces the closed form exactly. Throws PoleError where P(t) = 0.
double effective_rate(const ReservoirParams& r, double t);

/// First t > 0 with P(t) = 0; only the oscillatory branch (eta^2 > 0) has one.
std::optional<double> first_zero(const ReservoirParams& r);

/// rho_{nk,ml}(t) = rho_{nk,ml}(0) P_A(t)^{(n-m)^2} P_B(t)^{(k-l)^2}
BipartiteDensityMatrix evolve(const BipartiteDensityMatrix& rho0, const ReservoirParams& a,
                              const ReservoirParams& b, double t);

/// Memoryless limit: coherences scale by exp[-(Gamma1 (n-m)^2 + Gamma2 (k-l)^2) t / 2].
BipartiteDensityMatrix evolve_markovian(const BipartiteDensityMatrix& rho0, double decay_a,
                                        double decay_b, double t);

/// RK4 integration of d rho_{nk,ml}/dt = -(1/2)[Q_A (n-m)^2 + Q_B (k-l)^2] rho_{nk,ml}
/// with the effective rates. Needs steps >= 1000 and t before the first zero of
/// either decoherence factor (PoleError otherwise).
BipartiteDensityMatrix integrate_master_equation(const BipartiteDensityMatrix& rho0,
                                                 const ReservoirParams& a,
                                                 const ReservoirParams& b, double t, int steps);

/// t -> infinity fixed point: populations only.
BipartiteDensityMatrix dephase(const BipartiteDensityMatrix& rho);

}  // namespace qorrel
