#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "gridverify/likelihood.hpp"

namespace gridverify {

enum class RoundingMethod { topl, spanning_forest, bernoulli };

struct RoundingReport {
  Eigen::VectorXd b_binary;
  RoundingMethod method = RoundingMethod::topl;
  double objective_at_binary = 0.0;
  bool feasible = false;  // support_rank_ok of the binary vector
  int samples_drawn = 0;  // bernoulli only
};

/// Ones at the L largest entries of the relaxed solution, ties to the lowest
/// line index. Infeasible results are flagged, not raised.
RoundingReport round_top_l(const Objective& objective,
                           const Eigen::VectorXd& b_relaxed, int l_target);

/// Maximum-weight spanning forest with all substations contracted into one
/// root and edge weight b_relaxed[l]; always rank-feasible. When l_target
/// exceeds the forest size, the highest-weight remaining lines are added.
RoundingReport round_spanning_forest(const Objective& objective,
                                     const Eigen::VectorXd& b_relaxed,
                                     int l_target = -1);

/// Draws `samples` configurations with Pr(b_l = 1) = b_relaxed[l], keeps the
/// rank-feasible ones with exactly l_target active lines, and returns the
/// draw with the smallest objective. Falls back to round_top_l when no draw
/// is feasible.
RoundingReport round_bernoulli(const Objective& objective,
                               const Eigen::VectorXd& b_relaxed, int l_target,
                               int samples, std::uint64_t seed);

}  // namespace gridverify
