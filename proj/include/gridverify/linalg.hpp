#pragma once

#include <optional>

#include <Eigen/Dense>

namespace gridverify {

/// One Cholesky factorization of a symmetric positive-definite matrix,
/// reused for the inverse, the log-determinant, and trace solves.
/// `compute` returns nullopt when the factorization fails or the reciprocal
/// 1-norm condition estimate falls below `rcond_floor`.
class SpdFactor {
 public:
  static std::optional<SpdFactor> compute(const Eigen::MatrixXd& matrix,
                                          double rcond_floor = 1e-12);

  double log_det() const { return log_det_; }
  const Eigen::MatrixXd& inverse() const { return inverse_; }
  double rcond() const { return rcond_; }

  /// tr(H^{-1} M) via triangular solves.
  double trace_solve(const Eigen::MatrixXd& m) const {
    return llt_.solve(m).trace();
  }

  Eigen::MatrixXd solve(const Eigen::MatrixXd& m) const {
    return llt_.solve(m);
  }

 private:
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::MatrixXd inverse_;
  double log_det_ = 0.0;
  double rcond_ = 0.0;
};

inline double norm1(const Eigen::MatrixXd& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

inline std::optional<SpdFactor> SpdFactor::compute(
    const Eigen::MatrixXd& matrix, double rcond_floor) {
  SpdFactor f;
  f.llt_.compute(matrix);
  if (f.llt_.info() != Eigen::Success) return std::nullopt;
  f.inverse_ = f.llt_.solve(
      Eigen::MatrixXd::Identity(matrix.rows(), matrix.cols()));
  f.rcond_ = 1.0 / (norm1(matrix) * norm1(f.inverse_));
  if (!(f.rcond_ >= rcond_floor)) return std::nullopt;
  f.log_det_ = 2.0 * f.llt_.matrixLLT().diagonal().array().log().sum();
  return f;
}

}  // namespace gridverify
