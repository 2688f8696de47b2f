// qorrel: correlation dynamics of two dephased qutrits, written as CSV.
//
//   qorrel <evolve|surface|stationary-map|compare|pfactor> [options]
//
// Options may also come from a key=value file given with --config; flags on
// the command line take precedence. QORREL_THREADS sets the worker count.
// Exit status: 0 success, 2 configuration error, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <omp.h>

#include "CLI11.hpp"
#include "qorrel/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

qorrel::MixtureWeights resolve_weights(qorrel::Command cmd, std::optional<double> p0, std::optional<double> p1,
                                       std::optional<double> p2) {
  const int given = p0.has_value() + p1.has_value() + p2.has_value();
  if (given == 0) return qorrel::default_weights(cmd);
  if (given == 1) throw qorrel::ConfigError("give at least two of --p0 --p1 --p2");
  // one missing weight is completed from the simplex
  if (!p0) p0 = 1.0 - *p1 - *p2;
  if (!p1) p1 = 1.0 - *p0 - *p2;
  if (!p2) p2 = 1.0 - *p0 - *p1;
  return qorrel::MixtureWeights(*p0, *p1, *p2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation dynamics of two qutrits under independent dephasing reservoirs"};
  app.set_config("--config", "", "key=value file of options (command-line flags take precedence)");

  std::string command;
  std::optional<double> p0, p1, p2;
  double gamma_ratio = 1.0;
  bool markovian = false;
  double t_max = 10.0;
  int t_points = 201;
  int grid = 201;
  std::string out_path;
  std::string constraint = "simplex";

  app.add_option("command", command, "evolve | surface | stationary-map | compare | pfactor")
      ->required()
      ->check(CLI::IsMember({"evolve", "surface", "stationary-map", "compare", "pfactor"}));
  app.add_option("--p0", p0, "weight of |phi00>");
  app.add_option("--p1", p1, "weight of |phi01>");
  app.add_option("--p2", p2, "weight of |phi02>");
  app.add_option("--gamma-ratio", gamma_ratio, "reservoir bandwidth over decay rate, gamma/Gamma")->capture_default_str();
  app.add_flag("--markovian", markovian, "use the memoryless exponential limit");
  app.add_option("--tmax", t_max, "final Gamma t")->capture_default_str();
  app.add_option("--tpoints", t_points, "number of time samples")->capture_default_str();
  app.add_option("--grid", grid, "grid points per axis (surface, stationary-map)")->capture_default_str();
  app.add_option("--constraint", constraint, "stationary-map weight constraint")
      ->check(CLI::IsMember({"simplex", "quadratic"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "output CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (const int workers = qorrel::worker_count(); workers > 0) omp_set_num_threads(workers);

  try {
    qorrel::SweepConfig cfg;
    cfg.command = qorrel::parse_command(command);
    cfg.weights = resolve_weights(cfg.command, p0, p1, p2);
    cfg.gamma_ratio = gamma_ratio;
    cfg.markovian = markovian;
    cfg.t_max = t_max;
    cfg.t_points = t_points;
    cfg.grid = grid;
    cfg.constraint = constraint == "quadratic" ? qorrel::WeightConstraint::quadratic : qorrel::WeightConstraint::simplex;
    cfg.validate();

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path, std::ios::binary);
      if (!file) throw qorrel::ConfigError("cannot open output file " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    const qorrel::Table table = qorrel::run(cfg);
    qorrel::write_csv(out, table);
    out.flush();
    if (!table.all_ok()) {
      std::cerr << "qorrel: optimizer did not converge on some rows (see status column)\n";
      return kExitNumerical;
    }
  } catch (const qorrel::NumericalError& e) {
    std::cerr << "qorrel: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qorrel: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
