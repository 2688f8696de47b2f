#include "qorrel/measurement.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qorrel/error.hpp"
#include "qorrel/jacobi.hpp"

namespace qorrel {

namespace {
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

MeasurementAngles::MeasurementAngles(double theta, double phi, double chi1, double chi2)
    : theta_(theta), phi_(phi), chi1_(chi1), chi2_(chi2) {
  auto polar_ok = [](double x) { return x >= 0.0 && x <= kHalfPi; };
  auto phase_ok = [](double x) { return x >= 0.0 && x < kTwoPi; };
  if (!polar_ok(theta) || !polar_ok(phi))
    throw DomainError("theta and phi must lie in [0, pi/2]");
  if (!phase_ok(chi1) || !phase_ok(chi2))
    throw DomainError("chi1 and chi2 must lie in [0, 2 pi)");
}

double reflect_polar(double x) {
  double y = std::fmod(std::abs(x), std::numbers::pi);
  if (y > kHalfPi) y = std::numbers::pi - y;
  return std::clamp(y, 0.0, kHalfPi);
}

double wrap_phase(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  if (y >= kTwoPi) y = 0.0;
  return y;
}

MeasurementAngles MeasurementAngles::folded(double theta, double phi, double chi1, double chi2) {
  return MeasurementAngles(reflect_polar(theta), reflect_polar(phi), wrap_phase(chi1), wrap_phase(chi2));
}

MeasurementBasis measurement_basis_unchecked(double theta, double phi, double chi1, double chi2) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);
  const Complex e1 = std::polar(1.0, chi1);
  const Complex e2 = std::polar(1.0, chi2);
  return {{
      {e1 * (st * cp), e2 * (st * sp), Complex(ct)},
      {e1 * (ct * cp), e2 * (ct * sp), Complex(-st)},
      {e1 * (-sp), e2 * cp, Complex(0.0)},
  }};
}

MeasurementBasis measurement_basis(const MeasurementAngles& a) {
  return measurement_basis_unchecked(a.theta(), a.phi(), a.chi1(), a.chi2());
}

ConditionalEntropy::ConditionalEntropy(const BipartiteDensityMatrix& rho) {
  const auto e = rho.matrix().entries();
  std::copy(e.begin(), e.end(), rho_.begin());
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t m = 0; m < 3; ++m)
      for (std::size_t k = 0; k < 3; ++k) rho_a_[n * 3 + m] += rho_[(3 * n + k) * 9 + 3 * m + k];
}

namespace {

// p S(M / p) for an unnormalized conditional block M with trace p.
double weighted_entropy(std::array<Complex, 9>& block) {
  const double p = block[0].real() + block[4].real() + block[8].real();
  if (p < ConditionalEntropy::kMinProbability) return 0.0;
  for (Complex& z : block) z /= p;
  std::array<double, 3> w{};
  detail::jacobi_eigenvalues(block, 3, w);
  return p * entropy_bits(w);
}

}  // namespace

namespace {

// (1 x <v|) rho (1 x |v>), the unnormalized state of A after outcome v.
std::array<Complex, 9> conditional_block(const std::array<Complex, 81>& rho, const Vector3& v) {
  // u_{(n,k), m} = sum_l rho_{nk, ml} v_l
  std::array<Complex, 27> u{};
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t m = 0; m < 3; ++m) {
      const Complex* row = &rho[r * 9 + 3 * m];
      u[r * 3 + m] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
    }
  std::array<Complex, 9> block{};
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t m = 0; m < 3; ++m) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < 3; ++k) s += std::conj(v[k]) * u[(3 * n + k) * 3 + m];
      block[n * 3 + m] = s;
    }
  return block;
}

}  // namespace

double ConditionalEntropy::at(const MeasurementBasis& basis) const {
  std::array<Complex, 9> rest = rho_a_;
  double total = 0.0;
  for (std::size_t idx = 0; idx < 2; ++idx) {
    auto block = conditional_block(rho_, basis[idx]);
    for (std::size_t i = 0; i < 9; ++i) rest[i] -= block[i];
    total += weighted_entropy(block);
  }
  // The projectors sum to the identity on B, so the last block is rho_A minus
  // the other two unless cancellation would dominate a small outcome probability.
  if (rest[0].real() + rest[4].real() + rest[8].real() < 1e-6) rest = conditional_block(rho_, basis[2]);
  total += weighted_entropy(rest);
  return total;
}

double ConditionalEntropy::operator()(const MeasurementAngles& a) const {
  return at(measurement_basis(a));
}

double conditional_entropy(const BipartiteDensityMatrix& rho, const MeasurementAngles& a) {
  return ConditionalEntropy(rho)(a);
}

}  // namespace qorrel
