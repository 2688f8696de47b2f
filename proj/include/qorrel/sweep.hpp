#pragma once

// Sweeps behind the correlation-dynamics figures, emitted as CSV tables.
// Time is the dimensionless Gamma t throughout: Gamma = 1, gamma = gamma_ratio.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qorrel/correlations.hpp"
#include "qorrel/error.hpp"
#include "qorrel/states.hpp"

namespace qorrel {

enum class Command { evolve, surface, stationary_map, compare, pfactor };

/// How stationary-map turns a (p0, p1) node into mixture probabilities.
/// simplex: p2 = 1 - p0 - p1. quadratic: p2 = sqrt(1 - p0^2 - p1^2) with the
/// squares taken as the probabilities.
enum class WeightConstraint { simplex, quadratic };

class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

Command parse_command(std::string_view name);
std::string_view command_name(Command c);

/// Weights each command uses when none are given: (0.3, 0.6, 0.1) for
/// compare, (0.3, 0.1, 0.6) otherwise.
MixtureWeights default_weights(Command c);

struct SweepConfig {
  Command command = Command::evolve;
  MixtureWeights weights{0.3, 0.1, 0.6};
  double gamma_ratio = 1.0;
  double t_max = 10.0;
  int t_points = 201;
  int grid = 201;
  bool markovian = false;
  WeightConstraint constraint = WeightConstraint::simplex;
  OptimizerOptions optimizer;

  /// t_points >= 2, t_max > 0, grid >= 11, gamma_ratio > 0; ConfigError otherwise.
  void validate() const;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  /// Trailing per-row status ("ok" / "not_converged"); empty for commands without one.
  std::vector<std::string> status;

  bool has_status() const { return !status.empty(); }
  bool all_ok() const;
};

/// t_i = t_max * i / (t_points - 1)
std::vector<double> time_grid(double t_max, int t_points);

/// The evolved state at Gamma t under the config's reservoir model.
BipartiteDensityMatrix state_at(const SweepConfig& cfg, const BipartiteDensityMatrix& rho0, double gamma_t);

/// Gamma_t, mutual_information, classical, discord, argmax_theta, argmax_phi, status
Table run_evolve(const SweepConfig& cfg);
/// theta, phi, f
Table run_surface(const SweepConfig& cfg);
/// p0, p1, C_infinity
Table run_stationary_map(const SweepConfig& cfg);
/// Gamma_t, C_optimized, C_pointer_basis, status
Table run_compare(const SweepConfig& cfg);
/// Gamma_t, P
Table run_pfactor(const SweepConfig& cfg);

Table run(const SweepConfig& cfg);

/// 9 significant digits, no negative zero.
std::string format_value(double x);

/// Header line then one line per row, comma separated, LF endings.
void write_csv(std::ostream& out, const Table& table);

}  // namespace qorrel
