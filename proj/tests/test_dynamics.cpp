#include <cmath>
#include <random>

#include "doctest.h"
#include "qorrel/dynamics.hpp"
#include "qorrel/error.hpp"
#include "qorrel/states.hpp"
#include "test_support.hpp"

using namespace qorrel;

namespace {

// central difference of -2 ln|P|
double finite_difference_rate(const ReservoirParams& r, double t, double h) {
  return -2.0 * (std::log(std::abs(decoherence_factor(r, t + h))) - std::log(std::abs(decoherence_factor(r, t - h)))) /
         (2.0 * h);
}

BipartiteDensityMatrix random_state(std::mt19937_64& rng) {
  return BipartiteDensityMatrix(qorrel::testing::random_density(9, rng));
}

}  // namespace

TEST_CASE("decoherence factor starts at one on every branch") {
  for (double gamma : {0.001, 0.1, 2.0, 100.0})
    CHECK(decoherence_factor(ReservoirParams(1.0, gamma), 0.0) == 1.0);
  CHECK_THROWS_AS(decoherence_factor(ReservoirParams(1.0, 1.0), -1.0), DomainError);
  CHECK_THROWS_AS(ReservoirParams(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(ReservoirParams(1.0, -1.0), DomainError);
}

TEST_CASE("Markovian regime approaches exp(-Gamma t / 2)") {
  const ReservoirParams r(1.0, 100.0);  // Gamma = 0.01 gamma
  for (int i = 0; i <= 500; ++i) {
    const double t = 0.01 * i;
    CHECK(std::abs(decoherence_factor(r, t) - std::exp(-0.5 * t)) <= 0.02);
  }
}

TEST_CASE("critical point eta = 0 uses the series limit") {
  const double gamma = 2.0;
  const ReservoirParams r(1.0, gamma);  // Gamma = gamma / 2
  CHECK(r.eta_squared() == 0.0);
  for (double t : {0.0, 0.3, 1.0, 5.0, 40.0})
    CHECK(std::abs(decoherence_factor(r, t) - std::exp(-gamma * t / 2) * (1 + gamma * t / 2)) < 1e-14);
}

TEST_CASE("decoherence factor is continuous across the critical point") {
  // eta^2 = (Gamma - 1) for gamma = 2; step from slightly hyperbolic through series to slightly oscillatory
  const double t = 3.0;
  const double below = decoherence_factor(ReservoirParams(1.0 - 1e-7, 2.0), t);
  const double at = decoherence_factor(ReservoirParams(1.0, 2.0), t);
  const double above = decoherence_factor(ReservoirParams(1.0 + 1e-7, 2.0), t);
  CHECK(std::abs(below - at) < 1e-6);
  CHECK(std::abs(above - at) < 1e-6);
}

TEST_CASE("|P| <= 1 and P decays for all regimes") {
  for (double gamma : {0.001, 0.01, 0.1, 1.0, 2.0, 10.0, 1000.0}) {
    const ReservoirParams r(1.0, gamma);
    for (int i = 0; i <= 2000; ++i) CHECK(std::abs(decoherence_factor(r, 0.05 * i)) <= 1.0 + 1e-15);
    // long after both time scales 1/Gamma and 1/gamma
    CHECK(std::abs(decoherence_factor(r, 60.0 / std::min(1.0, gamma))) < 1e-6);
  }
}

TEST_CASE("first zero of the oscillatory branch") {
  const ReservoirParams r(1.0, 0.01);
  const auto z = first_zero(r);
  REQUIRE(z.has_value());
  const double eta = std::sqrt(r.eta_squared());
  // bisection oracle on (0, 2 pi / eta]
  double lo = 0.0, hi = 2.0 * std::numbers::pi / eta;
  double step = hi / 1000;
  for (double t = step; t <= hi; t += step)
    if (decoherence_factor(r, t) < 0) {
      hi = t;
      lo = t - step;
      break;
    }
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    (decoherence_factor(r, mid) > 0 ? lo : hi) = mid;
  }
  CHECK(std::abs(*z - 0.5 * (lo + hi)) < 1e-8 * *z);
  CHECK_FALSE(first_zero(ReservoirParams(1.0, 100.0)).has_value());
  CHECK_FALSE(first_zero(ReservoirParams(1.0, 2.0)).has_value());
}

TEST_CASE("effective rate matches finite differences on all three branches") {
  const double h = 1e-6;
  for (double gamma : {0.001, 0.1, 1.0, 2.0, 10.0, 100.0}) {
    const ReservoirParams r(1.0, gamma);
    CHECK(effective_rate(r, 0.0) == 0.0);
    const auto zero = first_zero(r);
    for (int i = 1; i <= 200; ++i) {
      const double t = 0.05 * i;
      if (zero && std::abs(t - *zero) < 0.05) continue;
      const double q = effective_rate(r, t);
      CHECK(std::abs(q - finite_difference_rate(r, t, h)) < 1e-5 * std::max(1.0, std::abs(q)));
    }
  }
}

TEST_CASE("effective rate tends to Gamma in the Markovian regime") {
  const ReservoirParams r(1.0, 100.0);
  for (double t : {0.5, 1.0, 5.0, 50.0}) CHECK(std::abs(effective_rate(r, t) - 1.0) < 0.02);
}

TEST_CASE("effective rate reports the pole at a zero of P") {
  const ReservoirParams r(1.0, 0.01);
  CHECK_THROWS_AS(effective_rate(r, *first_zero(r)), PoleError);
}

TEST_CASE("evolve examples") {
  const auto rho0 = initial_state(MixtureWeights(0.3, 0.1, 0.6));
  const ReservoirParams a(1.0, 0.3);
  const ReservoirParams b(0.7, 2.5);
  CHECK(approx_equal(evolve(rho0, a, b, 0.0).matrix(), rho0.matrix(), 0.0));
  for (double t : {0.5, 2.0, 13.0}) {
    const auto rho = evolve(rho0, a, b, t);
    for (std::size_t i = 0; i < 9; ++i) CHECK(rho.matrix()(i, i) == rho0.matrix()(i, i));
    CHECK(std::abs(rho.element(0, 0, 1, 1) - 0.1 * decoherence_factor(a, t) * decoherence_factor(b, t)) < 1e-15);
  }
}

TEST_CASE("evolve_markovian examples") {
  const auto rho0 = initial_state(MixtureWeights(0.5, 0.25, 0.25));
  CHECK(approx_equal(evolve_markovian(rho0, 1.0, 2.0, 0.0).matrix(), rho0.matrix(), 0.0));
  const double g1 = 0.8, g2 = 1.7, t = 0.9;
  const auto rho = evolve_markovian(rho0, g1, g2, t);
  CHECK(std::abs(rho.element(0, 0, 2, 2) - rho0.element(0, 0, 2, 2) * std::exp(-0.5 * (4 * g1 + 4 * g2) * t)) < 1e-15);
  CHECK_THROWS_AS(evolve_markovian(rho0, -1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("evolve agrees with its Markovian limit for gamma = 1000 Gamma") {
  const auto rho0 = initial_state(MixtureWeights(0.3, 0.1, 0.6));
  const ReservoirParams r(1.0, 1000.0);
  for (int i = 0; i <= 50; ++i) {
    const double t = 0.1 * i;
    CHECK(max_abs_difference(evolve(rho0, r, r, t).matrix(), evolve_markovian(rho0, 1.0, 1.0, t).matrix()) < 5e-3);
  }
}

TEST_CASE("Markovian evolution composes") {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 10; ++rep) {
    const auto rho = random_state(rng);
    const auto twice = evolve_markovian(evolve_markovian(rho, 0.4, 1.1, 0.7), 0.4, 1.1, 1.3);
    CHECK(max_abs_difference(twice.matrix(), evolve_markovian(rho, 0.4, 1.1, 2.0).matrix()) < 1e-10);
  }
}

TEST_CASE("evolution keeps states valid") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> log_ratio(-3.0, 3.0), time(0.0, 200.0);
  for (int rep = 0; rep < 50; ++rep) {
    const auto rho0 = rep % 2 ? random_state(rng) : initial_state(qorrel::testing::random_weights(rng));
    const ReservoirParams a(1.0, std::pow(10.0, log_ratio(rng)));
    const ReservoirParams b(0.5, std::pow(10.0, log_ratio(rng)));
    // the constructor checks Hermiticity, trace and eigenvalues >= -1e-9
    CHECK_NOTHROW(evolve(rho0, a, b, time(rng)));
  }
}

TEST_CASE("master-equation integration reproduces the closed form") {
  const auto rho0 = initial_state(MixtureWeights(0.3, 0.1, 0.6));
  const ReservoirParams r(1.0, 1.0);
  for (double t : {0.25, 1.0, 2.0}) {
    const auto ode = integrate_master_equation(rho0, r, r, t, 10000);
    CHECK(max_abs_difference(ode.matrix(), evolve(rho0, r, r, t).matrix()) < 1e-6);
    for (std::size_t i = 0; i < 9; ++i) CHECK(ode.matrix()(i, i) == rho0.matrix()(i, i));
    CHECK(std::abs(ode.matrix().trace() - 1.0) < 1e-10);
  }
}

TEST_CASE("master-equation integration refuses to cross a pole") {
  const auto rho0 = initial_state(MixtureWeights(0.3, 0.1, 0.6));
  const ReservoirParams r(1.0, 0.01);
  CHECK_THROWS_AS(integrate_master_equation(rho0, r, r, *first_zero(r) + 1.0, 10000), PoleError);
  CHECK_THROWS_AS(integrate_master_equation(rho0, r, r, 1.0, 999), DomainError);
}

TEST_CASE("dephase keeps populations only") {
  const auto rho = dephase(initial_state(MixtureWeights(0.3, 0.1, 0.6)));
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      if (i != j) CHECK(rho.matrix()(i, j) == Complex(0.0));
}
