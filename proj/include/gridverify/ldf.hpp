#pragma once

#include <utility>

#include <Eigen/Dense>

#include "gridverify/grid.hpp"

namespace gridverify {

enum class LdfMode { radial, meshed };

/// Squared-voltage sensitivities to active (R) and reactive (X) injections.
/// Both are symmetric positive definite whenever the support of b is
/// rank-feasible.
struct LdfMatrices {
  Eigen::MatrixXd R;
  Eigen::MatrixXd X;
  LdfMode mode = LdfMode::radial;
};

/// Weighted reduced Laplacian  sum_l w[l] a_l a_l^T.
Eigen::MatrixXd weighted_laplacian(const GridModel& grid,
                                   const Eigen::VectorXd& weights);

/// R(b) = [1/2 sum_l (b_l/r_l) a_l a_l^T]^{-1} and the analogue for X.
/// Throws SingularTopology when the support factorization fails.
LdfMatrices rx_radial(const GridModel& grid, const Eigen::VectorXd& b);

/// Meshed-grid sensitivities R = 2(G + B G^{-1} B)^{-1},
/// X = 2(B + G B^{-1} G)^{-1} built from the b-scaled conductance and
/// susceptance Laplacians. Coincides with rx_radial on spanning trees.
LdfMatrices rx_meshed(const GridModel& grid, const Eigen::VectorXd& b);

/// (dR/db_l, dX/db_l) for the radial parameterization:
/// dR/db_l = -(1/(2 r_l)) R a_l a_l^T R.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> drx_radial(
    const GridModel& grid, const Eigen::VectorXd& b, int line);

/// (dR/db_l, dX/db_l) for the meshed parameterization.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> drx_meshed(
    const GridModel& grid, const Eigen::VectorXd& b, int line);

/// Factorization products reused across all per-line derivatives at one b.
struct MeshedWorkspace {
  Eigen::MatrixXd R;     // 2(G + B G^{-1} B)^{-1}
  Eigen::MatrixXd X;     // 2(B + G B^{-1} G)^{-1}
  Eigen::MatrixXd RBGi;  // R B G^{-1}
  Eigen::MatrixXd XGBi;  // X G B^{-1}
};

MeshedWorkspace meshed_workspace(const GridModel& grid,
                                 const Eigen::VectorXd& b);

/// dR/db_l from a precomputed workspace (avoids refactorizing per line).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> drx_meshed_from(
    const MeshedWorkspace& w, const GridModel& grid, int line);

}  // namespace gridverify
