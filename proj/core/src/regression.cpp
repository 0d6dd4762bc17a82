#include "feval/regression.hpp"

#include <cmath>

#include "feval/dist.hpp"
#include "feval/errors.hpp"

namespace feval {

std::string to_string(Alternative alt) {
  switch (alt) {
    case Alternative::TwoSided:
      return "two-sided";
    case Alternative::Less:
      return "less";
    case Alternative::Greater:
      return "greater";
  }
  return "?";
}

RegressionResult ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const auto n = X.rows();
  const auto k = X.cols();
  if (n != y.size()) {
    throw Error("design matrix rows and response length differ");
  }
  if (n < k) {
    throw RankDeficientError("fewer observations than regressors");
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  if (qr.rank() < k) {
    std::string cols;
    auto perm = qr.colsPermutation().indices();
    for (auto i = qr.rank(); i < k; ++i) {
      if (!cols.empty()) cols += ", ";
      cols += std::to_string(perm(i));
    }
    throw RankDeficientError("design matrix rank deficient, columns: " + cols);
  }
  RegressionResult res;
  res.coef = qr.solve(y);
  res.residuals = y - X * res.coef;
  res.n = static_cast<int>(n);
  return res;
}

int nw_auto_bandwidth(const Eigen::MatrixXd& scores) {
  const int n = static_cast<int>(scores.rows());
  if (n < 4) {
    throw TooFewObservationsError(
        "bandwidth selection needs at least 4 observations");
  }
  // Unit-weight combination of the score columns.
  Eigen::VectorXd f = scores.rowwise().sum();

  auto autocov = [&](int lag) {
    double sum = 0.0;
    for (int i = lag; i < n; ++i) sum += f(i) * f(i - lag);
    return sum / n;
  };

  int n_pre = static_cast<int>(
      std::floor(4.0 * std::pow(n / 100.0, 2.0 / 9.0)));
  if (n_pre > n - 1) n_pre = n - 1;

  double s0 = autocov(0);
  double s1 = 0.0;
  for (int j = 1; j <= n_pre; ++j) {
    double g = autocov(j);
    s0 += 2.0 * g;
    s1 += 2.0 * j * g;
  }
  if (s0 == 0.0 || s1 <= 0.0) return 0;
  double gamma = 1.1447 * std::cbrt((s1 / s0) * (s1 / s0) * n);
  int m = static_cast<int>(std::floor(gamma));
  if (m < 0) m = 0;
  if (m > n - 1) m = n - 1;
  return m;
}

Eigen::MatrixXd nw_hac_cov(const Eigen::MatrixXd& X,
                           const Eigen::VectorXd& residuals,
                           std::optional<int> bandwidth,
                           int* bandwidth_used) {
  const int n = static_cast<int>(X.rows());
  const int k = static_cast<int>(X.cols());
  if (n != residuals.size()) {
    throw Error("design matrix rows and residual length differ");
  }
  Eigen::MatrixXd scores = X.array().colwise() * residuals.array();

  int m = bandwidth ? *bandwidth : nw_auto_bandwidth(scores);
  if (m < 0) throw Error("bandwidth must be non-negative");
  if (m > n - 1) m = n - 1;
  if (bandwidth_used) *bandwidth_used = m;

  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(k, k);
  // Lag-0 term.
  S = scores.transpose() * scores;
  for (int j = 1; j <= m; ++j) {
    double w = 1.0 - static_cast<double>(j) / (m + 1);
    Eigen::MatrixXd gj = Eigen::MatrixXd::Zero(k, k);
    for (int i = j; i < n; ++i) {
      gj += scores.row(i).transpose() * scores.row(i - j);
    }
    S += w * (gj + gj.transpose());
  }

  Eigen::MatrixXd xtx = X.transpose() * X;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(xtx);
  if (!lu.isInvertible()) {
    throw RankDeficientError("X'X singular in HAC covariance");
  }
  Eigen::MatrixXd bread = lu.inverse();
  return bread * S * bread;
}

RegressionResult ols_hac(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                         std::optional<int> bandwidth) {
  RegressionResult res = ols(X, y);
  res.hac_cov = nw_hac_cov(X, res.residuals, bandwidth, &res.bandwidth);
  return res;
}

HypothesisReport wald_test(const RegressionResult& res,
                           const Eigen::MatrixXd& R,
                           const Eigen::VectorXd& r) {
  if (R.cols() != res.coef.size() || R.rows() != r.size()) {
    throw Error("restriction dimensions do not match the fit");
  }
  Eigen::VectorXd diff = R * res.coef - r;
  Eigen::MatrixXd rvr = R * res.hac_cov * R.transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(rvr);
  if (!lu.isInvertible()) {
    throw SingularRestrictionError("R V R' is singular");
  }
  double w = diff.dot(lu.solve(diff));
  if (w < 0.0 && w > -1e-12) w = 0.0;  // numerical round-off near zero
  HypothesisReport report;
  report.statistic = w;
  report.df = static_cast<int>(R.rows());
  report.p_value = chi2_sf(w, report.df);
  report.alternative = Alternative::TwoSided;
  return report;
}

HypothesisReport t_test(const RegressionResult& res, int coef_index,
                        double null_value, Alternative alternative) {
  if (coef_index < 0 || coef_index >= res.coef.size()) {
    throw Error("coefficient index out of range");
  }
  double var = res.hac_cov(coef_index, coef_index);
  if (var <= 0.0) {
    throw ZeroVarianceError("zero variance for coefficient " +
                            std::to_string(coef_index));
  }
  double t = (res.coef(coef_index) - null_value) / std::sqrt(var);
  HypothesisReport report;
  report.statistic = t;
  report.alternative = alternative;
  switch (alternative) {
    case Alternative::Less:
      report.p_value = norm_cdf(t);
      break;
    case Alternative::Greater:
      report.p_value = 1.0 - norm_cdf(t);
      break;
    case Alternative::TwoSided:
      report.p_value = 2.0 * norm_cdf(-std::fabs(t));
      break;
  }
  return report;
}

}  // namespace feval
