#include "gridverify/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gridverify/errors.hpp"
#include "gridverify/linalg.hpp"
#include "gridverify/rng.hpp"

namespace gridverify {

namespace {

void check_square(const Eigen::MatrixXd& m, int n, const char* name) {
  if (m.rows() != n || m.cols() != n)
    throw InvalidInput(std::string("stats: ") + name + " must be " +
                       std::to_string(n) + "x" + std::to_string(n));
}

bool is_symmetric(const Eigen::MatrixXd& m, double tol) {
  return (m - m.transpose()).cwiseAbs().maxCoeff() <=
         tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

Eigen::MatrixXd stacked_covariance(const InjectionStatistics& stats) {
  const int n = static_cast<int>(stats.sigma_p.rows());
  Eigen::MatrixXd s(2 * n, 2 * n);
  s.topLeftCorner(n, n) = stats.sigma_p;
  s.topRightCorner(n, n) = stats.sigma_pq;
  s.bottomLeftCorner(n, n) = stats.sigma_pq.transpose();
  s.bottomRightCorner(n, n) = stats.sigma_q;
  return s;
}

// Symmetric PSD square root with small negative eigenvalues clipped to zero.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m, const char* name) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  const double scale = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  if (eig.eigenvalues().minCoeff() < -1e-9 * scale)
    throw InvalidInput(std::string("stats: ") + name +
                       " is not positive semidefinite");
  return eig.eigenvectors() *
         eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
         eig.eigenvectors().transpose();
}

}  // namespace

void validate_stats(const InjectionStatistics& stats, int n) {
  check_square(stats.sigma_p, n, "sigma_p");
  check_square(stats.sigma_q, n, "sigma_q");
  check_square(stats.sigma_pq, n, "sigma_pq");
  if (!is_symmetric(stats.sigma_p, 1e-10) ||
      !is_symmetric(stats.sigma_q, 1e-10))
    throw InvalidInput("stats: sigma_p and sigma_q must be symmetric");
  if (stats.sigma_n2 < 0.0)
    throw InvalidInput("stats: sigma_n2 must be nonnegative");
  if (stats.alpha && !(*stats.alpha > 0.0))
    throw InvalidInput("stats: alpha must be positive");
  psd_sqrt(stacked_covariance(stats), "stacked injection covariance");
}

double resolve_alpha(const InjectionStatistics& stats, const GridModel& grid) {
  if (stats.alpha) return *stats.alpha;
  std::vector<double> ratios;
  ratios.reserve(grid.line_count());
  for (const Line& line : grid.lines()) ratios.push_back(line.r / line.x);
  std::sort(ratios.begin(), ratios.end());
  const size_t mid = ratios.size() / 2;
  return ratios.size() % 2 == 1 ? ratios[mid]
                                : 0.5 * (ratios[mid - 1] + ratios[mid]);
}

Eigen::MatrixXd sigma_alpha(const InjectionStatistics& stats, double alpha) {
  return alpha * alpha * stats.sigma_p + stats.sigma_q +
         alpha * (stats.sigma_pq + stats.sigma_pq.transpose());
}

VoltageDataset sample_covariance(const Eigen::MatrixXd& raw_magnitudes) {
  if (raw_magnitudes.rows() < 2)
    throw InsufficientData("sample_covariance: need at least two voltage rows");
  if ((raw_magnitudes.array() <= 0.0).any())
    throw InvalidInput("sample_covariance: voltage magnitudes must be positive");
  const int t = static_cast<int>(raw_magnitudes.rows()) - 1;
  const Eigen::MatrixXd squared = raw_magnitudes.array().square();
  VoltageDataset data;
  data.T = t;
  data.samples = squared.bottomRows(t) - squared.topRows(t);
  data.sample_cov = (data.samples.transpose() * data.samples) / t;
  return data;
}

VoltageDataset dataset_from_covariance(Eigen::MatrixXd sigma_hat, int t) {
  VoltageDataset data;
  data.T = t;
  data.samples.resize(0, sigma_hat.cols());
  data.sample_cov = std::move(sigma_hat);
  return data;
}

Eigen::MatrixXd model_covariance_detailed(const LdfMatrices& ldf,
                                          const InjectionStatistics& stats) {
  const Eigen::MatrixXd cross = ldf.R * stats.sigma_pq * ldf.X;
  Eigen::MatrixXd sigma = ldf.R * stats.sigma_p * ldf.R +
                          ldf.X * stats.sigma_q * ldf.X + cross +
                          cross.transpose();
  sigma.diagonal().array() += stats.sigma_n2;
  return 0.5 * (sigma + sigma.transpose());
}

Eigen::MatrixXd model_covariance_simplified(const LdfMatrices& ldf,
                                            const InjectionStatistics& stats) {
  if (!stats.alpha)
    throw InvalidInput("model_covariance_simplified: alpha not resolved");
  const Eigen::MatrixXd sa = sigma_alpha(stats, *stats.alpha);
  if (!SpdFactor::compute(sa))
    throw SingularSigmaAlpha(
        "model_covariance_simplified: sigma_alpha failed the SPD "
        "factorization");
  return ldf.X * sa * ldf.X;
}

Eigen::MatrixXd simulate_voltages(const GridModel& grid,
                                  const Eigen::VectorXd& b_true,
                                  const InjectionStatistics& stats, int t,
                                  std::uint64_t seed, LdfMode mode) {
  const int n = grid.n();
  validate_stats(stats, n);
  if (t < 1) throw InvalidInput("simulate_voltages: need T >= 1");
  const LdfMatrices ldf = mode == LdfMode::radial ? rx_radial(grid, b_true)
                                                  : rx_meshed(grid, b_true);
  const Eigen::MatrixXd root =
      psd_sqrt(stacked_covariance(stats), "stacked injection covariance");
  const double noise_std = std::sqrt(stats.sigma_n2);

  CounterRng rng(seed);
  Eigen::MatrixXd magnitudes(t + 1, n);
  Eigen::VectorXd squared = Eigen::VectorXd::Ones(n);  // flat start, 1 pu^2
  magnitudes.row(0).setOnes();
  Eigen::VectorXd white(2 * n);
  for (int step = 1; step <= t; ++step) {
    for (int i = 0; i < 2 * n; ++i) white[i] = rng.normal();
    const Eigen::VectorXd pq = root * white;
    Eigen::VectorXd dv = ldf.R * pq.head(n) + ldf.X * pq.tail(n);
    for (int i = 0; i < n; ++i) dv[i] += noise_std * rng.normal();
    squared += dv;
    if ((squared.array() <= 0.0).any())
      throw InvalidInput(
          "simulate_voltages: increments drove a squared voltage "
          "non-positive; reduce the injection variances");
    magnitudes.row(step) = squared.array().sqrt();
  }
  return magnitudes;
}

}  // namespace gridverify
