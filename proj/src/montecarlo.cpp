#include "critradius/montecarlo.h"

#include <cmath>
#include <ostream>
#include <string>

#include <boost/math/distributions/normal.hpp>

#include "critradius/asymptotics.h"
#include "critradius/format.h"
#include "critradius/parallel.h"
#include "critradius/rgg.h"
#include "critradius/rng.h"

namespace critradius {

void validate(const ExperimentConfig& config) {
  if (config.k < 0) throw DomainError("experiment: k must be nonnegative");
  if (config.replications < 1) throw DomainError("experiment: replications must be at least 1");
  if (config.n < static_cast<std::size_t>(config.k) + 2) {
    throw DomainError("experiment: n must be at least k+2");
  }
  if (std::abs(config.region.area() - 1.0) > 1e-9) {
    throw DomainError("experiment: region '" + config.region.id() +
                      "' must have unit area (normalize it first)");
  }
  if (config.c_grid.empty()) throw DomainError("experiment: c grid is empty");
  for (double c : config.c_grid) {
    if (!std::isfinite(c)) throw DomainError("experiment: c values must be finite");
  }
}

std::uint64_t trial_seed(const ExperimentConfig& config, std::size_t trial_index) {
  return derive_seed(config.seed, trial_index);
}

TrialResult run_trial(const ExperimentConfig& config, std::size_t trial_index) {
  const std::uint64_t seed = trial_seed(config, trial_index);
  const PointSet points =
      config.process == Process::uniform
          ? sample_uniform(config.region, config.n, seed)
          : sample_poisson(config.region, static_cast<double>(config.n), seed);
  const RadiusResult radii = critical_radii(points, config.k + 1);
  return {trial_index, radii.rho_delta, radii.rho_kappa, radii.equal};
}

Interval wilson_interval(std::size_t successes, std::size_t trials, double confidence) {
  if (trials < 1) throw DomainError("wilson_interval: need at least one trial");
  if (successes > trials) throw DomainError("wilson_interval: successes exceed trials");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw DomainError("wilson_interval: confidence must lie in (0, 1)");
  }
  const double z = boost::math::quantile(boost::math::normal_distribution<double>(),
                                         0.5 * (1.0 + confidence));
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  Interval ci{center - half, center + half};
  if (successes == 0) ci.low = 0.0;
  if (successes == trials) ci.high = 1.0;
  ci.low = std::max(0.0, ci.low);
  ci.high = std::min(1.0, ci.high);
  return ci;
}

Summary run_experiment(const ExperimentConfig& config) {
  validate(config);
  Summary summary;
  summary.replications = config.replications;
  summary.trials.resize(config.replications);
  parallel_for(config.replications, config.threads,
               [&](std::size_t i) { summary.trials[i] = run_trial(config, i); });

  std::size_t equal = 0;
  for (const TrialResult& t : summary.trials) equal += t.equal ? 1 : 0;
  summary.equal_fraction = static_cast<double>(equal) / static_cast<double>(config.replications);

  for (double c : config.c_grid) {
    SummaryRow row;
    row.c = c;
    row.r_n = predicted_radius({static_cast<double>(config.n), config.k, c,
                                config.region.perimeter()});
    std::size_t hits_delta = 0;
    std::size_t hits_kappa = 0;
    for (const TrialResult& t : summary.trials) {
      hits_delta += t.rho_delta <= row.r_n ? 1 : 0;
      hits_kappa += t.rho_kappa <= row.r_n ? 1 : 0;
    }
    const double reps = static_cast<double>(config.replications);
    row.p_hat_delta = static_cast<double>(hits_delta) / reps;
    row.p_hat_kappa = static_cast<double>(hits_kappa) / reps;
    row.ci_delta = wilson_interval(hits_delta, config.replications);
    row.ci_kappa = wilson_interval(hits_kappa, config.replications);
    row.predicted = limit_probability(c);
    summary.rows.push_back(row);
  }
  return summary;
}

void write_summary_csv(std::ostream& out, const ExperimentConfig& config, const Summary& summary) {
  out << "c,r_n,p_hat_delta,ci_lo_delta,ci_hi_delta,p_hat_kappa,ci_lo_kappa,ci_hi_kappa,"
         "predicted,equal_fraction,reps,n,k,region_id,seed\n";
  for (const SummaryRow& row : summary.rows) {
    out << format_g17(row.c) << ',' << format_g17(row.r_n) << ',' << format_g17(row.p_hat_delta)
        << ',' << format_g17(row.ci_delta.low) << ',' << format_g17(row.ci_delta.high) << ','
        << format_g17(row.p_hat_kappa) << ',' << format_g17(row.ci_kappa.low) << ','
        << format_g17(row.ci_kappa.high) << ',' << format_g17(row.predicted) << ','
        << format_g17(summary.equal_fraction) << ',' << summary.replications << ',' << config.n
        << ',' << config.k << ',' << config.region.id() << ',' << config.seed << '\n';
  }
}

}  // namespace critradius
