// Serial reference vs OpenMP kernels: lattice scan of the conditional entropy,
// the long-time surface, and one full evolve sweep.

#include <chrono>
#include <cstdio>

#include <omp.h>

#include "qorrel/correlations.hpp"
#include "qorrel/dynamics.hpp"
#include "qorrel/kernels.hpp"
#include "qorrel/sweep.hpp"

namespace {

template <class F>
double seconds(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main() {
  using namespace qorrel;
  const auto rho0 = initial_state(MixtureWeights(0.3, 0.1, 0.6));
  const ReservoirParams r(1.0, 0.1);
  const auto rho = evolve(rho0, r, r, 1.5);
  const ConditionalEntropy ce(rho);
  const AngleLattice lattice{25, 13};

  std::printf("threads: %d\n", omp_get_max_threads());
  const double scan_s = seconds([&] { (void)kernels::conditional_entropy_scan_serial(ce, lattice); }, 3);
  const double scan_p = seconds([&] { (void)kernels::conditional_entropy_scan_omp(ce, lattice); }, 3);
  std::printf("%-28s serial %9.4f s  omp %9.4f s  speedup %.2f  (%zu points, %.3f us/point)\n", "conditional entropy scan",
              scan_s, scan_p, scan_s / scan_p, lattice.size(), 1e6 * scan_s / static_cast<double>(lattice.size()));

  const MixtureWeights w(0.3, 0.1, 0.6);
  const double surf_s = seconds([&] { (void)kernels::stationary_surface_serial(w, 201); }, 5);
  const double surf_p = seconds([&] { (void)kernels::stationary_surface_omp(w, 201); }, 5);
  std::printf("%-28s serial %9.4f s  omp %9.4f s  speedup %.2f\n", "long-time surface 201x201", surf_s, surf_p,
              surf_s / surf_p);

  OptimizerOptions serial_opt;
  serial_opt.execution = Execution::serial;
  OptimizerOptions omp_opt;
  const double opt_s = seconds([&] { (void)classical_correlations(rho, serial_opt); }, 2);
  const double opt_p = seconds([&] { (void)classical_correlations(rho, omp_opt); }, 2);
  std::printf("%-28s serial %9.4f s  omp %9.4f s  speedup %.2f\n", "classical correlations", opt_s, opt_p,
              opt_s / opt_p);

  SweepConfig cfg;
  cfg.t_points = 16;
  cfg.markovian = true;
  const double sweep = seconds([&] { (void)run_evolve(cfg); }, 1);
  std::printf("%-28s %9.4f s for %d time points\n", "evolve sweep (time-parallel)", sweep, cfg.t_points);
  return 0;
}
