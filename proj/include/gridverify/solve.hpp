#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gridverify/likelihood.hpp"

namespace gridverify {

enum class InitKind { uniform, given, random };

struct SolverConfig {
  double mu = 0.007;    // gradient step size
  int max_iters = 2000;
  double tol = 1e-7;    // iterate-change and relative objective-change floor
  int cardinality = -1;  // target active-line count L; < 0 means box only
  std::uint64_t seed = 1;
  InitKind init = InitKind::uniform;
  Eigen::VectorXd b0;  // used when init == given
};

struct SolverResult {
  Eigen::VectorXd b_relaxed;
  std::vector<double> objective_trace;  // value at each accepted iterate
  std::vector<double> gap_trace;        // Frank-Wolfe duality gap per iter
  double grad_norm_final = 0.0;
  int iterations_used = 0;
  bool converged = false;
  /// max over feasible b of grad^T (b_final - b); zero exactly at a
  /// stationary point of the constrained problem.
  double stationarity_residual = 0.0;
};

/// Euclidean projection onto {b in [0,1]^n : 1^T b = L} by bisection on the
/// dual scalar of the sum constraint.
Eigen::VectorXd project_capped_simplex(const Eigen::VectorXd& y, double L);

/// Projected gradient descent. Projection is the capped simplex when
/// config.cardinality >= 0, otherwise the per-entry clip to [0,1]. Steps
/// that land on a +inf objective are retried with a halved step, up to 30
/// times; exhaustion throws StepSizeCollapse. Returns the best iterate seen.
SolverResult pgd(const Objective& objective, const SolverConfig& config);

/// Frank-Wolfe with step 2/(k+2). The linear step sets the entries with the
/// L smallest gradient values to one (ties to the lowest index). Only
/// accepts the simplified (convex) objective.
SolverResult frank_wolfe(const Objective& objective,
                         const SolverConfig& config);

enum class SolverChoice { pgd, fw };

struct PipelineResult {
  SolverResult convex_stage;
  SolverResult final_stage;
  Objective convex_objective;
  Objective final_objective;
};

/// Solves the convex simplified problem, then uses its minimizer to
/// initialize projected gradient descent on the detailed likelihood.
PipelineResult solve_ml_detailed(const GridModel& grid,
                                 const InjectionStatistics& stats,
                                 const VoltageDataset& data,
                                 const SolverConfig& config,
                                 LdfMode mode = LdfMode::radial,
                                 SolverChoice convex_solver = SolverChoice::fw);

/// Convex simplified problem only.
SolverResult solve_ml_simplified(const GridModel& grid,
                                 const InjectionStatistics& stats,
                                 const VoltageDataset& data,
                                 const SolverConfig& config,
                                 SolverChoice solver = SolverChoice::fw);

}  // namespace gridverify
