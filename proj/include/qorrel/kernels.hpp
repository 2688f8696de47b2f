#pragma once

// Data-parallel scans behind the optimizers. Each kernel has an OpenMP
// version and a plain serial version; both write the same values in the
// same order, and the serial one is kept as the reference for tests and
// benchmarks.

#include <cstddef>
#include <vector>

#include "qorrel/measurement.hpp"
#include "qorrel/states.hpp"

namespace qorrel {

enum class Execution { serial, parallel };

/// theta, phi on `polar_points` uniform nodes of [0, pi/2] (both ends included);
/// chi1, chi2 on `phase_points` uniform nodes of [0, 2 pi) (2 pi excluded).
/// Flat index ((i_theta * P + i_phi) * Q + i_chi1) * Q + i_chi2, so flat order
/// is lexicographic order of the angles.
struct AngleLattice {
  int polar_points = 25;
  int phase_points = 13;

  std::size_t size() const;
  double polar(int i) const;
  double phase(int i) const;
  MeasurementAngles at(std::size_t flat) const;
  double polar_step() const;
  double phase_step() const;
};

namespace kernels {

std::vector<double> conditional_entropy_scan_serial(const ConditionalEntropy& ce, const AngleLattice& lattice);
std::vector<double> conditional_entropy_scan_omp(const ConditionalEntropy& ce, const AngleLattice& lattice);

/// f(theta_i, phi_j) of the long-time function on a grid x grid lattice over
/// [0, pi/2]^2, flat index i * grid + j.
std::vector<double> stationary_surface_serial(const MixtureWeights& w, int grid);
std::vector<double> stationary_surface_omp(const MixtureWeights& w, int grid);

}  // namespace kernels

inline std::vector<double> conditional_entropy_scan(const ConditionalEntropy& ce, const AngleLattice& lattice,
                                                    Execution ex) {
  return ex == Execution::parallel ? kernels::conditional_entropy_scan_omp(ce, lattice)
                                   : kernels::conditional_entropy_scan_serial(ce, lattice);
}

inline std::vector<double> stationary_surface(const MixtureWeights& w, int grid, Execution ex) {
  return ex == Execution::parallel ? kernels::stationary_surface_omp(w, grid)
                                   : kernels::stationary_surface_serial(w, grid);
}

/// Worker count requested through QORREL_THREADS, or 0 when it is unset or
/// not a positive integer (meaning: keep the OpenMP default).
int worker_count();

}  // namespace qorrel
