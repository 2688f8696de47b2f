#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "qorrel/dynamics.hpp"
#include "qorrel/sweep.hpp"
#include "test_support.hpp"

using namespace qorrel;
using qorrel::testing::log2_3;

namespace {

SweepConfig config(Command c, MixtureWeights w) {
  SweepConfig cfg;
  cfg.command = c;
  cfg.weights = w;
  return cfg;
}

std::string csv(const Table& t) {
  std::ostringstream s;
  write_csv(s, t);
  return s.str();
}

int sign_changes(const Table& t) {
  int n = 0;
  for (std::size_t i = 1; i < t.rows.size(); ++i)
    if ((t.rows[i - 1][1] > 0) != (t.rows[i][1] > 0) && t.rows[i][1] != 0.0) ++n;
  return n;
}

}  // namespace

TEST_CASE("command names round trip") {
  for (auto c : {Command::evolve, Command::surface, Command::stationary_map, Command::compare, Command::pfactor})
    CHECK(parse_command(command_name(c)) == c);
  CHECK(command_name(Command::stationary_map) == "stationary-map");
  CHECK_THROWS_AS(parse_command("plot"), ConfigError);
}

TEST_CASE("default weights") {
  CHECK(default_weights(Command::compare).values() == std::array<double, 3>{0.3, 0.6, 0.1});
  CHECK(default_weights(Command::evolve).values() == std::array<double, 3>{0.3, 0.1, 0.6});
}

TEST_CASE("config validation") {
  SweepConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.t_points = 1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.t_max = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.grid = 10;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.gamma_ratio = -1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK_THROWS_AS(run(cfg), ConfigError);
}

TEST_CASE("time grid") {
  const auto t = time_grid(10, 201);
  CHECK(t.size() == 201u);
  CHECK(t.front() == 0.0);
  CHECK(t.back() == 10.0);
  CHECK(t[100] == doctest::Approx(5.0));
}

TEST_CASE("value formatting") {
  CHECK(format_value(1.5849625007211562) == "1.5849625");
  CHECK(format_value(-0.0) == "0");
  CHECK(format_value(0.28950065654) == "0.289500657");
  CHECK(format_value(1e-12) == "1e-12");
}

TEST_CASE("csv layout") {
  Table t;
  t.header = {"a", "b"};
  t.rows = {{1.0, 0.5}, {2.0, -0.0}};
  CHECK(csv(t) == "a,b\n1,0.5\n2,0\n");
  t.header.push_back("status");
  t.status = {"ok", "not_converged"};
  CHECK(csv(t) == "a,b,status\n1,0.5,ok\n2,0,not_converged\n");
  CHECK_FALSE(t.all_ok());
}

TEST_CASE("pfactor") {
  auto cfg = config(Command::pfactor, default_weights(Command::pfactor));
  cfg.gamma_ratio = 0.001;
  cfg.t_max = 200;
  cfg.t_points = 2001;
  const auto t = run(cfg);
  CHECK(t.header == std::vector<std::string>{"Gamma_t", "P"});
  CHECK(t.rows.size() == 2001u);
  CHECK(t.rows[0][1] == 1.0);
  // zeros of P at 71.266 and 211.797 (numpy, closed form), so one crossing by 200
  CHECK(sign_changes(t) == 1);
  cfg.t_max = 400;
  cfg.t_points = 4001;
  CHECK(sign_changes(run(cfg)) == 3);

  cfg.gamma_ratio = 100;
  cfg.t_max = 5;
  cfg.t_points = 101;
  for (const auto& row : run(cfg).rows) CHECK(std::abs(row[1] - std::exp(-0.5 * row[0])) < 0.02);

  cfg.markovian = true;
  for (const auto& row : run(cfg).rows) CHECK(row[1] == std::exp(-0.5 * row[0]));
}

TEST_CASE("surface") {
  auto cfg = config(Command::surface, MixtureWeights(0.3, 0.1, 0.6));
  cfg.grid = 41;
  const auto t = run(cfg);
  CHECK(t.header == std::vector<std::string>{"theta", "phi", "f"});
  REQUIRE(t.rows.size() == 41u * 41u);
  double best = -1;
  for (const auto& r : t.rows) best = std::max(best, r[2]);
  CHECK(std::abs(best - 0.2895006565) < 1e-9);
  for (std::size_t idx : {std::size_t{0}, std::size_t{40}, std::size_t{40 * 41}, std::size_t{41 * 41 - 1}})
    CHECK(std::abs(t.rows[idx][2] - best) < 1e-9);
  CHECK(t.rows.back()[0] == 0.5 * std::numbers::pi);

  cfg.weights = MixtureWeights(1.0 / 3, 1.0 / 3, 1.0 / 3);
  for (const auto& r : run(cfg).rows) CHECK(std::abs(r[2]) < 1e-12);
}

TEST_CASE("stationary map") {
  auto cfg = config(Command::stationary_map, default_weights(Command::stationary_map));
  cfg.grid = 31;
  const auto t = run(cfg);
  CHECK(t.header == std::vector<std::string>{"p0", "p1", "C_infinity"});
  CHECK(t.rows.size() == 31u * 32u / 2u);
  auto value_at = [&](double p0, double p1) {
    for (const auto& r : t.rows)
      if (std::abs(r[0] - p0) < 1e-12 && std::abs(r[1] - p1) < 1e-12) return r[2];
    FAIL("node missing");
    return -1.0;
  };
  CHECK(std::abs(value_at(1, 0) - log2_3()) < 1e-12);
  CHECK(std::abs(value_at(0, 1) - log2_3()) < 1e-12);
  CHECK(std::abs(value_at(0, 0) - log2_3()) < 1e-12);
  CHECK(std::abs(value_at(10.0 / 30, 10.0 / 30)) < 1e-12);
  for (const auto& r : t.rows) {
    CHECK(r[2] >= 0.0);
    CHECK(r[2] <= log2_3() + 1e-12);
  }

  cfg.constraint = WeightConstraint::quadratic;
  const auto q = run(cfg);
  for (const auto& r : q.rows) CHECK(r[0] * r[0] + r[1] * r[1] <= 1.0 + 1e-12);
  CHECK(q.rows.size() > t.rows.size());
}

TEST_CASE("evolve: pure Bell state keeps its classical correlations") {
  auto cfg = config(Command::evolve, MixtureWeights(0, 0, 1));
  cfg.markovian = true;
  cfg.t_points = 6;
  const auto t = run(cfg);
  CHECK(t.header == std::vector<std::string>{"Gamma_t", "mutual_information", "classical", "discord", "argmax_theta",
                                             "argmax_phi", "status"});
  REQUIRE(t.rows.size() == 6u);
  CHECK(t.all_ok());
  for (const auto& r : t.rows) {
    CHECK(std::abs(r[2] - log2_3()) < 1e-5);
    CHECK(std::abs(r[2] + r[3] - r[1]) < 1e-6);
  }
}

TEST_CASE("evolve: balanced mixture decays") {
  auto cfg = config(Command::evolve, MixtureWeights(1.0 / 3, 1.0 / 3, 1.0 / 3));
  cfg.markovian = true;
  cfg.t_max = 8;
  cfg.t_points = 5;
  const auto t = run(cfg);
  for (const auto& r : t.rows) {
    CHECK(std::abs(r[2] + r[3] - r[1]) < 1e-6);
    if (r[0] >= 6.0) {
      CHECK(r[2] < 0.01);
      CHECK(r[3] < 0.01);
    }
  }
}

TEST_CASE("evolve output is deterministic") {
  auto cfg = config(Command::evolve, MixtureWeights(0.2, 0.5, 0.3));
  cfg.gamma_ratio = 0.1;
  cfg.t_max = 4;
  cfg.t_points = 3;
  CHECK(csv(run(cfg)) == csv(run(cfg)));
}

TEST_CASE("compare") {
  auto cfg = config(Command::compare, default_weights(Command::compare));
  cfg.markovian = true;
  cfg.t_max = 0.3;
  cfg.t_points = 2;
  const auto t = run(cfg);
  CHECK(t.header == std::vector<std::string>{"Gamma_t", "C_optimized", "C_pointer_basis", "status"});
  REQUIRE(t.rows.size() == 2u);
  // references from an independent numpy implementation with many random restarts
  CHECK(std::abs(t.rows[0][1] - 1.0128052505) < 1e-5);
  CHECK(std::abs(t.rows[1][1] - 0.3585848601) < 1e-5);
  CHECK(std::abs(t.rows[0][2] - 0.2895006565) < 1e-9);
  for (const auto& r : t.rows) CHECK(r[1] >= r[2] - 1e-7);
}

TEST_CASE("state_at follows the configured reservoir") {
  const auto rho0 = initial_state(MixtureWeights(0.3, 0.1, 0.6));
  SweepConfig cfg;
  cfg.gamma_ratio = 0.5;
  CHECK(max_abs_difference(state_at(cfg, rho0, 1.5).matrix(),
                           evolve(rho0, ReservoirParams(1, 0.5), ReservoirParams(1, 0.5), 1.5).matrix()) == 0.0);
  cfg.markovian = true;
  CHECK(max_abs_difference(state_at(cfg, rho0, 1.5).matrix(), evolve_markovian(rho0, 1, 1, 1.5).matrix()) == 0.0);
}
