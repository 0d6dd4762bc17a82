#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

namespace feval {

/// OLS fit with (optionally) a Bartlett-kernel HAC covariance attached.
struct RegressionResult {
  Eigen::VectorXd coef;
  Eigen::VectorXd residuals;
  Eigen::MatrixXd hac_cov;  // empty until attach_hac / ols_hac
  int n = 0;
  int bandwidth = 0;

  double se(int i) const { return std::sqrt(hac_cov(i, i)); }
};

enum class Alternative { TwoSided, Less, Greater };

std::string to_string(Alternative alt);

struct HypothesisReport {
  double statistic = 0.0;
  int df = 0;  // Wald only; 0 for t tests
  double p_value = 1.0;
  Alternative alternative = Alternative::TwoSided;
};

/// Least squares via column-pivoted QR. Throws RankDeficientError naming
/// the collinear columns.
RegressionResult ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

/// Newey-West (1994) plug-in bandwidth from the score matrix (rows x_i u_i).
/// Bartlett kernel, no prewhitening; scores are combined with unit weights.
/// Throws TooFewObservationsError for fewer than 4 rows.
int nw_auto_bandwidth(const Eigen::MatrixXd& scores);

/// Bartlett-weighted sandwich covariance (X'X)^-1 S (X'X)^-1 with
/// S = G0 + sum_{j<=m} (1 - j/(m+1)) (Gj + Gj'), Gj the lag-j score
/// autocovariance sum. bandwidth nullopt selects nw_auto_bandwidth.
Eigen::MatrixXd nw_hac_cov(const Eigen::MatrixXd& X,
                           const Eigen::VectorXd& residuals,
                           std::optional<int> bandwidth,
                           int* bandwidth_used = nullptr);

/// OLS with HAC covariance filled in.
RegressionResult ols_hac(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                         std::optional<int> bandwidth = std::nullopt);

/// Wald test of R beta = r against chi-square with rows(R) df.
/// Throws SingularRestrictionError if R V R' is not invertible.
HypothesisReport wald_test(const RegressionResult& res,
                           const Eigen::MatrixXd& R, const Eigen::VectorXd& r);

/// t test of beta_i = null_value with standard normal reference.
/// Throws ZeroVarianceError when the coefficient variance vanishes.
HypothesisReport t_test(const RegressionResult& res, int coef_index,
                        double null_value, Alternative alternative);

}  // namespace feval
