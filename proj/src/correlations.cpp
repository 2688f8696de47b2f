#include "qorrel/correlations.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "qorrel/error.hpp"
#include "qorrel/nelder_mead.hpp"

namespace qorrel {

double mutual_information(const BipartiteDensityMatrix& rho) {
  return von_neumann_entropy(partial_trace_B(rho)) + von_neumann_entropy(partial_trace_A(rho)) -
         von_neumann_entropy(rho);
}

double classical_information_at(const BipartiteDensityMatrix& rho, const MeasurementAngles& a) {
  return von_neumann_entropy(partial_trace_B(rho)) - conditional_entropy(rho, a);
}

ClassicalResult classical_correlations(const BipartiteDensityMatrix& rho, const OptimizerOptions& opt) {
  if (opt.lattice.polar_points < 2 || opt.lattice.phase_points < 1 || opt.starts < 1)
    throw DomainError("optimizer lattice or start count too small");
  const ConditionalEntropy ce(rho);
  const double entropy_a = von_neumann_entropy(partial_trace_B(rho));

  const std::vector<double> scan = conditional_entropy_scan(ce, opt.lattice, opt.execution);

  // lowest conditional entropy first, ties to the lexicographically smaller node
  const std::size_t starts = std::min<std::size_t>(static_cast<std::size_t>(opt.starts), scan.size());
  std::vector<std::size_t> idx(scan.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(starts), idx.end(),
                    [&](std::size_t a, std::size_t b) { return scan[a] < scan[b] || (scan[a] == scan[b] && a < b); });

  MeasurementAngles best_at = opt.lattice.at(idx[0]);
  double best = std::numeric_limits<double>::infinity();
  bool best_converged = false;
  long evaluations = static_cast<long>(scan.size());

  auto objective = [&](const std::array<double, 4>& x) {
    return ce(MeasurementAngles::folded(x[0], x[1], x[2], x[3]));
  };
  const std::array<double, 4> step{opt.lattice.polar_step(), opt.lattice.polar_step(),
                                   opt.lattice.phase_step(), opt.lattice.phase_step()};
  const SimplexOptions simplex{opt.value_spread, opt.max_evaluations_per_start};

  for (std::size_t s = 0; s < starts; ++s) {
    const MeasurementAngles a0 = opt.lattice.at(idx[s]);
    const auto r = minimize_simplex<4>(objective, {a0.theta(), a0.phi(), a0.chi1(), a0.chi2()}, step, simplex);
    evaluations += r.evaluations;
    const MeasurementAngles at = MeasurementAngles::folded(r.x[0], r.x[1], r.x[2], r.x[3]);
    if (r.value < best || (r.value == best && at < best_at)) {
      best = r.value;
      best_at = at;
      best_converged = r.converged;
    }
  }

  ClassicalResult out;
  out.value = std::max(0.0, entropy_a - best);
  out.argmax = best_at;
  out.evaluations = evaluations;
  out.converged = best_converged;
  return out;
}

CorrelationResult discord(const BipartiteDensityMatrix& rho, const OptimizerOptions& opt) {
  const ClassicalResult c = classical_correlations(rho, opt);
  CorrelationResult r;
  r.mutual_information = mutual_information(rho);
  r.classical = c.value;
  r.argmax = c.argmax;
  r.optimizer_evaluations = c.evaluations;
  r.converged = c.converged;
  const double d = r.mutual_information - c.value;
  if (d < -kDiscordNoiseFloor) throw NumericalError("negative discord " + std::to_string(d));
  r.discord = std::max(0.0, d);
  return r;
}

}  // namespace qorrel
