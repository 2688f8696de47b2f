#include "qorrel/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qorrel/error.hpp"

namespace qorrel {

namespace {

constexpr double kSeriesThreshold = 1e-8;

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and non-negative");
}

// P(t) = e^{beta t} (C(t) - beta S(t)) with C = cos(eta t), S = sin(eta t)/eta on the
// oscillatory branch. Both are returned scaled by e^{-kappa t} on the hyperbolic
// branch so that large t does not overflow; `log_scale` receives beta t (+ kappa t).
struct Branch {
  double c;
  double s;
  double log_scale;
};

Branch branch_terms(const ReservoirParams& r, double t) {
  const double beta = r.beta();
  const double e2 = r.eta_squared();
  if (std::abs(e2) * t * t < kSeriesThreshold) {
    const double x = e2 * t * t;
    return {1.0 - 0.5 * x, t * (1.0 - x / 6.0), beta * t};
  }
  if (e2 > 0.0) {
    const double eta = std::sqrt(e2);
    return {std::cos(eta * t), std::sin(eta * t) / eta, beta * t};
  }
  const double kappa = std::sqrt(-e2);
  const double decay = std::exp(-2.0 * kappa * t);
  return {0.5 * (1.0 + decay), 0.5 * (1.0 - decay) / kappa, (beta + kappa) * t};
}

}  // namespace

ReservoirParams::ReservoirParams(double decay_rate, double bandwidth)
    : decay_(decay_rate), bandwidth_(bandwidth) {
  if (!(decay_rate > 0.0) || !std::isfinite(decay_rate))
    throw DomainError("reservoir decay rate must be positive");
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth))
    throw DomainError("reservoir bandwidth must be positive");
}

double decoherence_factor(const ReservoirParams& r, double t) {
  require_time(t);
  const Branch b = branch_terms(r, t);
  return std::exp(b.log_scale) * (b.c - r.beta() * b.s);
}

double effective_rate(const ReservoirParams& r, double t) {
  require_time(t);
  const Branch b = branch_terms(r, t);
  const double denom = b.c - r.beta() * b.s;
  if (std::abs(denom) <= 1e-12 * (std::abs(b.c) + std::abs(r.beta() * b.s)))
    throw PoleError("effective dephasing rate diverges at t = " + std::to_string(t));
  return r.decay_rate() * r.bandwidth() * b.s / denom;
}

std::optional<double> first_zero(const ReservoirParams& r) {
  const double e2 = r.eta_squared();
  if (!(e2 > 0.0)) return std::nullopt;
  const double eta = std::sqrt(e2);
  // tan(eta t) = eta / beta < 0  ->  eta t = pi - atan(eta / |beta|)
  return (std::numbers::pi - std::atan(eta / -r.beta())) / eta;
}

namespace {

template <class FactorA, class FactorB>
ComplexMatrix scale_coherences(const BipartiteDensityMatrix& rho0, FactorA&& fa, FactorB&& fb) {
  ComplexMatrix out = rho0.matrix();
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t m = 0; m < 3; ++m)
        for (std::size_t l = 0; l < 3; ++l) {
          const int da = static_cast<int>(n) - static_cast<int>(m);
          const int db = static_cast<int>(k) - static_cast<int>(l);
          out(BipartiteDensityMatrix::index(n, k), BipartiteDensityMatrix::index(m, l)) *=
              fa(da * da) * fb(db * db);
        }
  return out;
}

}  // namespace

BipartiteDensityMatrix evolve(const BipartiteDensityMatrix& rho0, const ReservoirParams& a,
                              const ReservoirParams& b, double t) {
  require_time(t);
  const double pa = decoherence_factor(a, t);
  const double pb = decoherence_factor(b, t);
  // exponents are 0, 1 or 4
  auto power = [](double p) { return [p](int e) { return e == 0 ? 1.0 : (e == 1 ? p : (p * p) * (p * p)); }; };
  return BipartiteDensityMatrix(scale_coherences(rho0, power(pa), power(pb)));
}

BipartiteDensityMatrix evolve_markovian(const BipartiteDensityMatrix& rho0, double decay_a,
                                        double decay_b, double t) {
  require_time(t);
  if (!(decay_a >= 0.0) || !(decay_b >= 0.0)) throw DomainError("Markovian decay rates must be non-negative");
  auto factor = [t](double g) { return [g, t](int e) { return std::exp(-0.5 * g * e * t); }; };
  return BipartiteDensityMatrix(scale_coherences(rho0, factor(decay_a), factor(decay_b)));
}

BipartiteDensityMatrix integrate_master_equation(const BipartiteDensityMatrix& rho0,
                                                 const ReservoirParams& a,
                                                 const ReservoirParams& b, double t, int steps) {
  require_time(t);
  if (steps < 1000) throw DomainError("integrate_master_equation needs at least 1000 steps");
  for (const ReservoirParams* r : {&a, &b}) {
    const auto z = first_zero(*r);
    if (z && t >= *z)
      throw PoleError("integration interval reaches the zero of P at t = " + std::to_string(*z));
  }

  // The generator is diagonal in the element basis, so each element carries
  // its own scalar ODE y' = -(1/2)[Q_A da + Q_B db] y.
  const double h = t / steps;
  ComplexMatrix rho = rho0.matrix();
  for (int step = 0; step < steps; ++step) {
    const double s = step * h;
    const double qa[3] = {effective_rate(a, s), effective_rate(a, s + 0.5 * h), effective_rate(a, s + h)};
    const double qb[3] = {effective_rate(b, s), effective_rate(b, s + 0.5 * h), effective_rate(b, s + h)};
    for (std::size_t n = 0; n < 3; ++n)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t m = 0; m < 3; ++m)
          for (std::size_t l = 0; l < 3; ++l) {
            const int da = static_cast<int>(n) - static_cast<int>(m);
            const int db = static_cast<int>(k) - static_cast<int>(l);
            const int da2 = da * da;
            const int db2 = db * db;
            if (da2 == 0 && db2 == 0) continue;
            auto g = [&](int i) { return -0.5 * (qa[i] * da2 + qb[i] * db2); };
            Complex& y = rho(BipartiteDensityMatrix::index(n, k), BipartiteDensityMatrix::index(m, l));
            const Complex k1 = g(0) * y;
            const Complex k2 = g(1) * (y + 0.5 * h * k1);
            const Complex k3 = g(1) * (y + 0.5 * h * k2);
            const Complex k4 = g(2) * (y + h * k3);
            y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
          }
  }
  return BipartiteDensityMatrix(std::move(rho));
}

BipartiteDensityMatrix dephase(const BipartiteDensityMatrix& rho) {
  ComplexMatrix out(9, 9);
  for (std::size_t i = 0; i < 9; ++i) out(i, i) = rho.matrix()(i, i);
  return BipartiteDensityMatrix(std::move(out));
}

}  // namespace qorrel
