#pragma once

#include <limits>

#include <Eigen/Dense>

#include "gridverify/grid.hpp"
#include "gridverify/ldf.hpp"
#include "gridverify/stats.hpp"

namespace gridverify {

enum class ObjectiveKind { detailed, simplified, map_detailed, map_simplified };

/// Everything needed to evaluate one objective: the grid, the injection
/// statistics, the data covariance, and (for MAP) the prior log-odds with
/// hard priors eliminated from the variable.
struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::detailed;
  LdfMode mode = LdfMode::radial;
  GridModel grid;
  InjectionStatistics stats;
  Eigen::MatrixXd sigma_hat;
  int T = 1;  // sample count; scales the MAP likelihood term
  Eigen::VectorXd beta;   // log((1-pi)/pi) per line; map_* kinds only
  Eigen::VectorXi fixed;  // -1 free, 0/1 pinned by a hard prior; may be empty
};

ObjectiveSpec make_ml_spec(ObjectiveKind kind, const GridModel& grid,
                           const InjectionStatistics& stats,
                           const VoltageDataset& data,
                           LdfMode mode = LdfMode::radial);

/// base_kind is detailed or simplified; priors holds pi per line.
/// pi = 0 or 1 pins the line instead of producing an infinite beta.
ObjectiveSpec make_map_spec(ObjectiveKind base_kind, const GridModel& grid,
                            const InjectionStatistics& stats,
                            const VoltageDataset& data, LdfMode mode,
                            const Eigen::VectorXd& priors);

inline constexpr double kInfiniteObjective =
    std::numeric_limits<double>::infinity();

/// Negative log-likelihood log|Sigma(b)| + tr(Sigma^{-1}(b) Sigma-hat),
/// evaluated through one SPD factorization. Returns +inf when the support is
/// rank-deficient or Sigma(b) is numerically singular.
double eval_f(const ObjectiveSpec& spec, const Eigen::VectorXd& b);

/// Exact gradient of eval_f; throws SingularTopology where eval_f is +inf.
Eigen::VectorXd grad_f(const ObjectiveSpec& spec, const Eigen::VectorXd& b);

/// Convex surrogate -2 log|X^{-1}(b)| + tr(X^{-1} Sa^{-1} X^{-1} Sigma-hat);
/// +inf when X^{-1}(b) is singular. Requires b >= 0.
double eval_ftilde(const ObjectiveSpec& spec, const Eigen::VectorXd& b);

Eigen::VectorXd grad_ftilde(const ObjectiveSpec& spec,
                            const Eigen::VectorXd& b);

/// (T/2) f(b) + beta^T b over the free lines, with pinned lines forced.
double eval_map(const ObjectiveSpec& spec, const Eigen::VectorXd& b);

/// (T/2) grad f(b) + beta; entries of pinned lines are zero.
Eigen::VectorXd grad_map(const ObjectiveSpec& spec, const Eigen::VectorXd& b);

/// Uniform value/gradient interface consumed by the solvers; dispatches on
/// spec.kind.
class Objective {
 public:
  explicit Objective(ObjectiveSpec spec) : spec_(std::move(spec)) {}

  double value(const Eigen::VectorXd& b) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& b) const;
  const ObjectiveSpec& spec() const { return spec_; }

 private:
  ObjectiveSpec spec_;
};

}  // namespace gridverify
