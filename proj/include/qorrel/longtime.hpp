#pragma once

// Stationary (t -> infinity) classical correlations of the dephased Bell
// mixture. Only theta and phi survive in the long-time function
//   f(theta, phi) = log2 3 + (1/3) sum_{j=1..9} lambda_j log2 lambda_j,
// whose maximum over [0, pi/2]^2 is the frozen value of C.

#include <array>
#include <cstddef>
#include <vector>

#include "qorrel/kernels.hpp"
#include "qorrel/measurement.hpp"
#include "qorrel/states.hpp"

namespace qorrel {

/// lambda_1..lambda_9. Entries 0-2, 3-5 and 6-8 are the three closed-form
/// expressions, each evaluated for (x, y, z) = (p0, p1, p2), (p1, p2, p0), (p2, p0, p1).
struct StationaryEigenvalues {
  std::array<double, 9> lambdas{};
  double triple_sum(std::size_t t) const { return lambdas[3 * t] + lambdas[3 * t + 1] + lambdas[3 * t + 2]; }
};

/// theta, phi must lie in [0, pi/2] (DomainError otherwise).
StationaryEigenvalues stationary_lambdas(const MixtureWeights& w, double theta, double phi);

double f_stationary(const MixtureWeights& w, double theta, double phi);

struct PolarAngles {
  double theta = 0.0;
  double phi = 0.0;
  friend auto operator<=>(const PolarAngles&, const PolarAngles&) = default;
};

struct StationaryResult {
  double value = 0.0;
  /// Every grid node within 1e-9 of the maximum, lexicographic (theta, phi).
  std::vector<PolarAngles> argmax;
  /// Largest f over the corners (0,0), (pi/2,0), (0,pi/2), (pi/2,pi/2).
  double corner_value = 0.0;
  bool corner_attains_max = false;
};

struct StationaryOptions {
  int grid = 201;
  Execution execution = Execution::parallel;
};

inline constexpr double kArgmaxTolerance = 1e-9;

/// Grid search plus simplex refinement of f, with the corner check.
StationaryResult stationary_classical(const MixtureWeights& w, const StationaryOptions& opt = {});

/// Corner value log2 3 - H(p0, p1, p2) with no search.
double stationary_classical_fast(const MixtureWeights& w);

/// Measurement basis at (theta, phi) = (0, 0) with zero phases: {|2>, |0>, |1>}.
MeasurementBasis pointer_basis();

/// I(inf) - C(inf), where I(inf) = log2 3 - H(p) on the fully dephased state.
double stationary_discord(const MixtureWeights& w, const StationaryOptions& opt = {});

/// Node i of an n-point uniform grid with spacing h on [0, pi/2]; the last node is exactly pi/2.
double surface_node(std::size_t i, std::size_t n, double h);

}  // namespace qorrel
