#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gridverify/rng.hpp"
#include "gridverify/round.hpp"
#include "gridverify/solve.hpp"

namespace gridverify {

struct VerificationMetrics {
  int line_errors = 0;           // entries where b_hat != b_true
  double error_probability = 0;  // line_errors / Le
  double true_positive_rate = 0;
  double false_positive_rate = 0;
};

/// Mismatch counts over all lines; TPR/FPR over the switchable subset
/// (positives = energized lines). With no positives TPR is 1, with no
/// negatives FPR is 0. Throws LengthMismatch / InvalidInput.
VerificationMetrics compare_topologies(const Eigen::VectorXd& b_hat,
                                       const Eigen::VectorXd& b_true);
VerificationMetrics compare_topologies(const Eigen::VectorXd& b_hat,
                                       const Eigen::VectorXd& b_true,
                                       const std::vector<bool>& switchable);

/// Uniform random rank-feasible topology: a random-weight spanning forest
/// plus uniformly chosen extra lines up to l_target.
Eigen::VectorXd random_feasible_topology(const GridModel& grid, int l_target,
                                         CounterRng& rng);

/// Inverse-covariance sign heuristic: scores candidate lines from the
/// Moore-Penrose pseudo-inverse of the sample covariance (negated
/// off-diagonal entry; row sum for substation-incident lines) and returns
/// the maximum-weight spanning forest under those scores.
Eigen::VectorXd baseline_sign_mst(const GridModel& grid,
                                  const Eigen::MatrixXd& sigma_hat);

enum class Scheme { detailed, simplified, map, random_topology, sign_mst };

std::string scheme_name(Scheme s);

struct MonteCarloConfig {
  std::vector<Scheme> schemes{Scheme::detailed};
  std::vector<int> t_grid{10, 50, 200, 500};
  std::vector<double> thresholds;  // MAP truncation sweep; empty -> {0.5}
  int runs = 30;
  int l_target = -1;  // active lines per drawn topology; < 0 -> N
  LdfMode mode = LdfMode::radial;
  RoundingMethod rounding = RoundingMethod::topl;
  SolverConfig solver;
  SolverChoice convex_solver = SolverChoice::fw;
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Skip simulation and hand the solver the ensemble covariance of the
  /// drawn topology (the asymptotic regime).
  bool use_ensemble_cov = false;
};

struct MonteCarloRow {
  int run = 0;
  std::string scheme;
  int T = 0;
  int line_errors = 0;
  double error_probability = 0;
  double tpr = 0;
  double fpr = 0;
  double runtime_ms = 0;
  double objective_relaxed = 0;
  double objective_binary = 0;
};

/// Seed-deterministic experiment harness: per run draws a feasible truth,
/// simulates meter data, runs the selected schemes over the sample-count
/// grid, rounds, and records metrics. Failed runs are recorded with
/// scheme "failed:<name>" rather than aborting the sweep. Runs execute on
/// config.jobs workers; rows come back ordered by (run, scheme, T).
std::vector<MonteCarloRow> monte_carlo(const GridModel& grid,
                                       const InjectionStatistics& stats,
                                       const MonteCarloConfig& config);

void write_rows_csv(const std::vector<MonteCarloRow>& rows, std::ostream& out,
                    bool include_runtime = true);

}  // namespace gridverify
