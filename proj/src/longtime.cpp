#include "qorrel/longtime.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qorrel/error.hpp"
#include "qorrel/nelder_mead.hpp"

namespace qorrel {

namespace {
constexpr double kHalfPi = 0.5 * std::numbers::pi;
const double kLog2Of3 = std::log2(3.0);
}  // namespace

double surface_node(std::size_t i, std::size_t n, double h) {
  return i + 1 == n ? kHalfPi : static_cast<double>(i) * h;
}

StationaryEigenvalues stationary_lambdas(const MixtureWeights& w, double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kHalfPi) || !(phi >= 0.0 && phi <= kHalfPi))
    throw DomainError("theta and phi must lie in [0, pi/2]");
  const double c2t = std::cos(theta) * std::cos(theta);
  const double s2t = std::sin(theta) * std::sin(theta);
  const double c2p = std::cos(phi) * std::cos(phi);
  const double s2p = std::sin(phi) * std::sin(phi);
  const double cos2p = std::cos(2.0 * phi);

  StationaryEigenvalues out;
  for (std::size_t a = 0; a < 3; ++a) {
    const double x = w[a];
    const double y = w[(a + 1) % 3];
    const double z = w[(a + 2) % 3];
    const double yz = y * c2p + z * s2p;
    out.lambdas[a] = x * c2t + s2t * yz;
    out.lambdas[3 + a] = x * s2t + c2t * yz;
    out.lambdas[6 + a] = 0.5 * (1.0 - x + (y - z) * cos2p);
  }
  return out;
}

double f_stationary(const MixtureWeights& w, double theta, double phi) {
  const auto l = stationary_lambdas(w, theta, phi);
  double s = 0.0;
  for (double x : l.lambdas)
    if (x > 0.0) s += x * std::log2(x);
  return kLog2Of3 + s / 3.0;
}

StationaryResult stationary_classical(const MixtureWeights& w, const StationaryOptions& opt) {
  if (opt.grid < 2) throw DomainError("stationary grid needs at least 2 points");
  const auto n = static_cast<std::size_t>(opt.grid);
  const double h = kHalfPi / (opt.grid - 1);
  const std::vector<double> surface = stationary_surface(w, opt.grid, opt.execution);

  // first maximal node in flat (lexicographic) order
  const std::size_t best = static_cast<std::size_t>(
      std::max_element(surface.begin(), surface.end()) - surface.begin());
  const PolarAngles grid_best{surface_node(best / n, n, h), surface_node(best % n, n, h)};

  auto objective = [&](const std::array<double, 2>& x) {
    return -f_stationary(w, reflect_polar(x[0]), reflect_polar(x[1]));
  };
  const auto refined = minimize_simplex<2>(objective, {grid_best.theta, grid_best.phi}, {0.5 * h, 0.5 * h},
                                           SimplexOptions{1e-14, 2000});
  const PolarAngles refined_at{reflect_polar(refined.x[0]), reflect_polar(refined.x[1])};

  StationaryResult r;
  r.value = std::max(surface[best], -refined.value);
  for (std::size_t i = 0; i < surface.size(); ++i)
    if (surface[i] >= r.value - kArgmaxTolerance)
      r.argmax.push_back({surface_node(i / n, n, h), surface_node(i % n, n, h)});
  if (-refined.value > surface[best] + kArgmaxTolerance) {
    r.argmax.push_back(refined_at);
    std::sort(r.argmax.begin(), r.argmax.end());
  }

  r.corner_value = std::max({f_stationary(w, 0.0, 0.0), f_stationary(w, kHalfPi, 0.0),
                             f_stationary(w, 0.0, kHalfPi), f_stationary(w, kHalfPi, kHalfPi)});
  r.corner_attains_max = r.corner_value >= r.value - kArgmaxTolerance;
  return r;
}

double stationary_classical_fast(const MixtureWeights& w) {
  return std::max(0.0, kLog2Of3 - shannon_entropy(w.values()));
}

MeasurementBasis pointer_basis() { return measurement_basis(MeasurementAngles(0.0, 0.0, 0.0, 0.0)); }

double stationary_discord(const MixtureWeights& w, const StationaryOptions& opt) {
  const double mutual = kLog2Of3 - shannon_entropy(w.values());
  const double d = mutual - stationary_classical(w, opt).value;
  if (d < -1e-7) throw NumericalError("stationary classical correlations exceed the mutual information");
  return std::max(d, 0.0);
}

}  // namespace qorrel
