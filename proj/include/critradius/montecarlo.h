#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "critradius/geometry.h"
#include "critradius/sampling.h"

namespace critradius {

/// Replicated experiment on a unit-area region. `k` follows the limit law:
/// trials measure the radii for delta >= k+1 and kappa >= k+1.
struct ExperimentConfig {
  ConvexRegion region = unit_square();
  std::size_t n = 2000;
  int k = 0;
  std::vector<double> c_grid{-1.0, 0.0, 1.0, 2.0};
  std::size_t replications = 1000;
  std::uint64_t seed = 1;
  Process process = Process::uniform;
  /// 0 picks hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
};

struct TrialResult {
  std::size_t trial_index = 0;
  double rho_delta = 0.0;
  double rho_kappa = 0.0;
  bool equal = false;
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

struct SummaryRow {
  double c = 0.0;
  double r_n = 0.0;
  double p_hat_delta = 0.0;
  Interval ci_delta;
  double p_hat_kappa = 0.0;
  Interval ci_kappa;
  double predicted = 0.0;
};

struct Summary {
  std::vector<SummaryRow> rows;
  double equal_fraction = 0.0;
  std::size_t replications = 0;
  std::vector<TrialResult> trials;
};

/// Throws DomainError when the configuration is unusable.
void validate(const ExperimentConfig& config);

/// Seed of trial `trial_index`'s point process.
std::uint64_t trial_seed(const ExperimentConfig& config, std::size_t trial_index);

/// One replication; a pure function of (config, trial_index).
TrialResult run_trial(const ExperimentConfig& config, std::size_t trial_index);

/// All trials, then the empirical probabilities P(rho <= r_n) per c with
/// 95% Wilson intervals. Each trial's radii are compared against every c.
Summary run_experiment(const ExperimentConfig& config);

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::size_t successes, std::size_t trials, double confidence = 0.95);

/// CSV with columns
/// c,r_n,p_hat_delta,ci_lo_delta,ci_hi_delta,p_hat_kappa,ci_lo_kappa,ci_hi_kappa,
/// predicted,equal_fraction,reps,n,k,region_id,seed
void write_summary_csv(std::ostream& out, const ExperimentConfig& config, const Summary& summary);

}  // namespace critradius
