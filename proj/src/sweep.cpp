#include "qorrel/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>

#include "qorrel/dynamics.hpp"
#include "qorrel/longtime.hpp"

namespace qorrel {

Command parse_command(std::string_view name) {
  if (name == "evolve") return Command::evolve;
  if (name == "surface") return Command::surface;
  if (name == "stationary-map") return Command::stationary_map;
  if (name == "compare") return Command::compare;
  if (name == "pfactor") return Command::pfactor;
  throw ConfigError("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::evolve: return "evolve";
    case Command::surface: return "surface";
    case Command::stationary_map: return "stationary-map";
    case Command::compare: return "compare";
    case Command::pfactor: return "pfactor";
  }
  return "";
}

MixtureWeights default_weights(Command c) {
  return c == Command::compare ? MixtureWeights(0.3, 0.6, 0.1) : MixtureWeights(0.3, 0.1, 0.6);
}

void SweepConfig::validate() const {
  if (t_points < 2) throw ConfigError("tpoints must be at least 2");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ConfigError("tmax must be positive");
  if (grid < 11) throw ConfigError("grid must be at least 11");
  if (!(gamma_ratio > 0.0) || !std::isfinite(gamma_ratio)) throw ConfigError("gamma-ratio must be positive");
}

bool Table::all_ok() const {
  for (const auto& s : status)
    if (s != "ok") return false;
  return true;
}

std::vector<double> time_grid(double t_max, int t_points) {
  std::vector<double> t(static_cast<std::size_t>(t_points));
  for (int i = 0; i < t_points; ++i) t[static_cast<std::size_t>(i)] = t_max * i / (t_points - 1);
  t.back() = t_max;
  return t;
}

BipartiteDensityMatrix state_at(const SweepConfig& cfg, const BipartiteDensityMatrix& rho0, double gamma_t) {
  if (cfg.markovian) return evolve_markovian(rho0, 1.0, 1.0, gamma_t);
  const ReservoirParams r(1.0, cfg.gamma_ratio);
  return evolve(rho0, r, r, gamma_t);
}

namespace {

// Evaluates fn(i) for i in [0, n) across the worker pool and gathers the
// results in index order. The first exception by index is rethrown.
template <class Row, class Fn>
std::vector<Row> gather(std::size_t n, Fn&& fn) {
  std::vector<Row> out(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct StatusRow {
  std::vector<double> values;
  bool converged = true;
};

Table assemble(std::vector<std::string> header, std::vector<StatusRow> rows) {
  Table t;
  t.header = std::move(header);
  t.header.push_back("status");
  for (auto& r : rows) {
    t.rows.push_back(std::move(r.values));
    t.status.push_back(r.converged ? "ok" : "not_converged");
  }
  return t;
}

}  // namespace

Table run_evolve(const SweepConfig& cfg) {
  cfg.validate();
  const auto times = time_grid(cfg.t_max, cfg.t_points);
  const auto rho0 = initial_state(cfg.weights);
  OptimizerOptions inner = cfg.optimizer;
  inner.execution = Execution::serial;  // parallelism is across time points
  auto rows = gather<StatusRow>(times.size(), [&](std::size_t i) {
    const auto r = discord(state_at(cfg, rho0, times[i]), inner);
    return StatusRow{{times[i], r.mutual_information, r.classical, r.discord, r.argmax.theta(), r.argmax.phi()},
                     r.converged};
  });
  return assemble({"Gamma_t", "mutual_information", "classical", "discord", "argmax_theta", "argmax_phi"},
                  std::move(rows));
}

Table run_compare(const SweepConfig& cfg) {
  cfg.validate();
  const auto times = time_grid(cfg.t_max, cfg.t_points);
  const auto rho0 = initial_state(cfg.weights);
  OptimizerOptions inner = cfg.optimizer;
  inner.execution = Execution::serial;
  const MeasurementAngles pointer(0.0, 0.0, 0.0, 0.0);
  auto rows = gather<StatusRow>(times.size(), [&](std::size_t i) {
    const auto rho = state_at(cfg, rho0, times[i]);
    const auto c = classical_correlations(rho, inner);
    return StatusRow{{times[i], c.value, classical_information_at(rho, pointer)}, c.converged};
  });
  return assemble({"Gamma_t", "C_optimized", "C_pointer_basis"}, std::move(rows));
}

Table run_surface(const SweepConfig& cfg) {
  cfg.validate();
  const auto n = static_cast<std::size_t>(cfg.grid);
  const double h = 0.5 * std::acos(-1.0) / (cfg.grid - 1);
  const auto f = stationary_surface(cfg.weights, cfg.grid, cfg.optimizer.execution);
  Table t;
  t.header = {"theta", "phi", "f"};
  t.rows.reserve(f.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.rows.push_back({surface_node(i, n, h), surface_node(j, n, h), f[i * n + j]});
  return t;
}

Table run_stationary_map(const SweepConfig& cfg) {
  cfg.validate();
  const int g = cfg.grid;
  struct Node {
    double p0, p1;
  };
  std::vector<Node> nodes;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      const double p0 = static_cast<double>(i) / (g - 1);
      const double p1 = static_cast<double>(j) / (g - 1);
      const double used = cfg.constraint == WeightConstraint::simplex ? p0 + p1 : p0 * p0 + p1 * p1;
      if (used <= 1.0 + 1e-12) nodes.push_back({p0, p1});
    }

  auto rows = gather<std::vector<double>>(nodes.size(), [&](std::size_t k) {
    const auto [p0, p1] = nodes[k];
    const MixtureWeights w = cfg.constraint == WeightConstraint::simplex
                                 ? MixtureWeights(p0, p1, std::max(0.0, 1.0 - p0 - p1))
                                 : MixtureWeights(p0 * p0, p1 * p1, std::max(0.0, 1.0 - p0 * p0 - p1 * p1));
    const double c = stationary_classical_fast(w);
#ifdef QORREL_VALIDATE
    const double searched = stationary_classical(w, {201, Execution::serial}).value;
    if (std::abs(searched - c) > 1e-9)
      throw NumericalError("stationary corner value disagrees with the grid search at p0=" + format_value(p0) +
                           " p1=" + format_value(p1));
#endif
    return std::vector<double>{p0, p1, c};
  });
  Table t;
  t.header = {"p0", "p1", "C_infinity"};
  t.rows = std::move(rows);
  return t;
}

Table run_pfactor(const SweepConfig& cfg) {
  cfg.validate();
  const ReservoirParams r(1.0, cfg.gamma_ratio);
  Table t;
  t.header = {"Gamma_t", "P"};
  for (double time : time_grid(cfg.t_max, cfg.t_points))
    t.rows.push_back({time, cfg.markovian ? std::exp(-0.5 * time) : decoherence_factor(r, time)});
  return t;
}

Table run(const SweepConfig& cfg) {
  switch (cfg.command) {
    case Command::evolve: return run_evolve(cfg);
    case Command::surface: return run_surface(cfg);
    case Command::stationary_map: return run_stationary_map(cfg);
    case Command::compare: return run_compare(cfg);
    case Command::pfactor: return run_pfactor(cfg);
  }
  throw ConfigError("unknown command");
}

std::string format_value(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
  out << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_value(row[i]);
    if (table.has_status()) out << ',' << table.status[r];
    out << '\n';
  }
}

}  // namespace qorrel
