#include <numbers>

#include <omp.h>

#include "qorrel/error.hpp"
#include "qorrel/kernels.hpp"
#include "qorrel/longtime.hpp"

namespace qorrel::kernels {

std::vector<double> conditional_entropy_scan_omp(const ConditionalEntropy& ce, const AngleLattice& lattice) {
  const auto n = static_cast<std::ptrdiff_t>(lattice.size());
  std::vector<double> out(lattice.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = ce(lattice.at(static_cast<std::size_t>(i)));
  return out;
}

std::vector<double> stationary_surface_omp(const MixtureWeights& w, int grid) {
  if (grid < 2) throw DomainError("surface grid needs at least 2 points");
  const auto n = static_cast<std::ptrdiff_t>(grid);
  std::vector<double> out(static_cast<std::size_t>(n * n));
  const double h = 0.5 * std::numbers::pi / (grid - 1);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    for (std::ptrdiff_t j = 0; j < n; ++j)
      out[static_cast<std::size_t>(i * n + j)] =
          f_stationary(w, surface_node(static_cast<std::size_t>(i), static_cast<std::size_t>(n), h),
                       surface_node(static_cast<std::size_t>(j), static_cast<std::size_t>(n), h));
  return out;
}

}  // namespace qorrel::kernels
