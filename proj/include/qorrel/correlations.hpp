#pragma once

// Mutual information, classical correlations (maximized over projective
// measurements on B) and discord, all in bits.

#include "qorrel/kernels.hpp"
#include "qorrel/measurement.hpp"
#include "qorrel/qmath.hpp"

namespace qorrel {

/// S(rho_A) + S(rho_B) - S(rho_AB)
double mutual_information(const BipartiteDensityMatrix& rho);

/// Two-stage search: a coarse lattice scan over all four angles, then simplex
/// refinement from the `starts` best lattice nodes.
struct OptimizerOptions {
  AngleLattice lattice{25, 13};
  int starts = 5;
  double value_spread = 1e-9;
  int max_evaluations_per_start = 2000;
  Execution execution = Execution::parallel;
};

struct ClassicalResult {
  double value = 0.0;
  MeasurementAngles argmax;
  long evaluations = 0;
  /// False when the refinement that produced `value` hit its evaluation cap;
  /// `value` is still the best point found.
  bool converged = true;
};

struct CorrelationResult {
  double mutual_information = 0.0;
  double classical = 0.0;
  double discord = 0.0;
  MeasurementAngles argmax;
  long optimizer_evaluations = 0;
  bool converged = true;
};

/// S(rho_A) - conditional_entropy(rho, a): the information one fixed basis extracts.
double classical_information_at(const BipartiteDensityMatrix& rho, const MeasurementAngles& a);

ClassicalResult classical_correlations(const BipartiteDensityMatrix& rho, const OptimizerOptions& opt = {});

/// Discord below -1e-7 throws NumericalError; values in [-1e-7, 0) are reported as 0.
CorrelationResult discord(const BipartiteDensityMatrix& rho, const OptimizerOptions& opt = {});

inline constexpr double kDiscordNoiseFloor = 1e-7;

}  // namespace qorrel
