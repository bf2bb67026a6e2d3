#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "gridverify/grid.hpp"
#include "gridverify/ldf.hpp"

namespace gridverify {

/// Second-order statistics of the differential injections, plus the meter
/// noise variance and the common resistance-to-reactance ratio used by the
/// simplified model.
struct InjectionStatistics {
  Eigen::MatrixXd sigma_p;   // N x N covariance of active-power increments
  Eigen::MatrixXd sigma_q;   // N x N covariance of reactive increments
  Eigen::MatrixXd sigma_pq;  // N x N cross-covariance
  double sigma_n2 = 0.0;     // measurement noise variance, >= 0
  std::optional<double> alpha;  // common r/x ratio; see resolve_alpha
};

/// Checks symmetry of sigma_p/sigma_q and positive semidefiniteness of the
/// stacked 2N x 2N increment covariance. Throws InvalidInput.
void validate_stats(const InjectionStatistics& stats, int n);

/// stats.alpha when present, else the median of r_l/x_l over candidate lines.
double resolve_alpha(const InjectionStatistics& stats, const GridModel& grid);

/// Effective injection covariance of the simplified model:
/// alpha^2 Sigma_p + Sigma_q + alpha (Sigma_pq + Sigma_pq^T).
Eigen::MatrixXd sigma_alpha(const InjectionStatistics& stats, double alpha);

/// Differential squared-voltage samples and their second-moment matrix.
/// sample_cov deliberately subtracts no mean: the differential data are
/// modeled as zero-mean, so Sigma-hat = (1/T) sum_t v_t v_t^T.
struct VoltageDataset {
  Eigen::MatrixXd samples;  // T x N
  int T = 0;
  Eigen::MatrixXd sample_cov;  // N x N
};

/// Squares raw voltage magnitudes, takes first differences across rows, and
/// forms the (uncentered) sample covariance. Throws InsufficientData when
/// fewer than two rows are given, InvalidInput on non-positive magnitudes.
VoltageDataset sample_covariance(const Eigen::MatrixXd& raw_magnitudes);

/// Dataset with an externally supplied covariance and no raw samples.
VoltageDataset dataset_from_covariance(Eigen::MatrixXd sigma_hat, int t);

/// Model-implied covariance of the differential squared voltages:
/// R Sp R + X Sq X + R Spq X + X Spq^T R + sigma_n2 I.
Eigen::MatrixXd model_covariance_detailed(const LdfMatrices& ldf,
                                          const InjectionStatistics& stats);

/// Simplified-model covariance X Sigma_alpha X; requires stats.alpha.
/// Throws SingularSigmaAlpha when Sigma_alpha fails the SPD factorization.
Eigen::MatrixXd model_covariance_simplified(const LdfMatrices& ldf,
                                            const InjectionStatistics& stats);

/// Draws T i.i.d. Gaussian increment pairs from the stacked covariance,
/// pushes them through the sensitivity matrices with white meter noise,
/// integrates onto a flat 1 pu^2 start, and returns the (T+1) x N matrix of
/// voltage magnitudes. Deterministic given the seed.
Eigen::MatrixXd simulate_voltages(const GridModel& grid,
                                  const Eigen::VectorXd& b_true,
                                  const InjectionStatistics& stats, int t,
                                  std::uint64_t seed,
                                  LdfMode mode = LdfMode::radial);

}  // namespace gridverify
