#include <cstdlib>
#include <numbers>
#include <string>

#include "qorrel/error.hpp"
#include "qorrel/kernels.hpp"
#include "qorrel/longtime.hpp"

namespace qorrel {

std::size_t AngleLattice::size() const {
  const auto p = static_cast<std::size_t>(polar_points);
  const auto q = static_cast<std::size_t>(phase_points);
  return p * p * q * q;
}

double AngleLattice::polar_step() const { return 0.5 * std::numbers::pi / (polar_points - 1); }
double AngleLattice::phase_step() const { return 2.0 * std::numbers::pi / phase_points; }

double AngleLattice::polar(int i) const {
  return i == polar_points - 1 ? 0.5 * std::numbers::pi : i * polar_step();
}

double AngleLattice::phase(int i) const { return i * phase_step(); }

MeasurementAngles AngleLattice::at(std::size_t flat) const {
  const auto q = static_cast<std::size_t>(phase_points);
  const auto p = static_cast<std::size_t>(polar_points);
  const int c2 = static_cast<int>(flat % q);
  flat /= q;
  const int c1 = static_cast<int>(flat % q);
  flat /= q;
  const int ph = static_cast<int>(flat % p);
  const int th = static_cast<int>(flat / p);
  return MeasurementAngles(polar(th), polar(ph), phase(c1), phase(c2));
}

namespace kernels {

std::vector<double> conditional_entropy_scan_serial(const ConditionalEntropy& ce, const AngleLattice& lattice) {
  std::vector<double> out(lattice.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ce(lattice.at(i));
  return out;
}

std::vector<double> stationary_surface_serial(const MixtureWeights& w, int grid) {
  if (grid < 2) throw DomainError("surface grid needs at least 2 points");
  const std::size_t n = static_cast<std::size_t>(grid);
  std::vector<double> out(n * n);
  const double h = 0.5 * std::numbers::pi / (grid - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i * n + j] = f_stationary(w, surface_node(i, n, h), surface_node(j, n, h));
  return out;
}

}  // namespace kernels

int worker_count() {
  if (const char* env = std::getenv("QORREL_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return 0;
}

}  // namespace qorrel
