#include <doctest.h>

#include <random>

#include "feval/errors.hpp"
#include "feval/regression.hpp"
#include "oracle.hpp"

using namespace feval;

namespace {

oracle::Matrix to_oracle(const Eigen::MatrixXd& X) {
  oracle::Matrix out(X.rows(), oracle::Vector(X.cols()));
  for (int i = 0; i < X.rows(); ++i) {
    for (int j = 0; j < X.cols(); ++j) out[i][j] = X(i, j);
  }
  return out;
}

oracle::Vector to_oracle(const Eigen::VectorXd& v) {
  return oracle::Vector(v.data(), v.data() + v.size());
}

}  // namespace

TEST_CASE("exact linear data recovers the slope") {
  Eigen::MatrixXd X(4, 1);
  X << 1, 2, 3, 4;
  Eigen::VectorXd y = 2.0 * X.col(0);
  auto res = ols(X, y);
  CHECK(res.coef(0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(res.residuals.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("intercept-only fit is the mean") {
  Eigen::MatrixXd X = Eigen::MatrixXd::Ones(5, 1);
  Eigen::VectorXd y(5);
  y << 1.0, 2.0, 4.0, 8.0, 10.0;
  CHECK(ols(X, y).coef(0) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("collinear design is rejected") {
  Eigen::MatrixXd X(5, 2);
  for (int i = 0; i < 5; ++i) {
    X(i, 0) = i + 1.0;
    X(i, 1) = 2.0 * (i + 1.0);
  }
  Eigen::VectorXd y = Eigen::VectorXd::Ones(5);
  CHECK_THROWS_AS(ols(X, y), RankDeficientError);
}

TEST_CASE("coefficients and HAC covariance match the brute-force oracle") {
  std::mt19937 rng(7);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::uniform_int_distribution<int> n_dist(6, 20);
  std::uniform_int_distribution<int> k_dist(1, 4);
  std::uniform_int_distribution<int> m_dist(0, 3);

  for (int trial = 0; trial < 50; ++trial) {
    int n = n_dist(rng);
    int k = std::min(k_dist(rng), n - 2);
    int m = m_dist(rng);
    Eigen::MatrixXd X(n, k);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
      X(i, 0) = 1.0;
      for (int j = 1; j < k; ++j) X(i, j) = noise(rng);
      y(i) = noise(rng);
    }

    auto res = ols_hac(X, y, m);
    auto beta = oracle::ols(to_oracle(X), to_oracle(y));
    auto u = oracle::residuals(to_oracle(X), to_oracle(y), beta);
    auto V = oracle::hac_cov(to_oracle(X), u, m);

    for (int j = 0; j < k; ++j) {
      CHECK(res.coef(j) == doctest::Approx(beta[j]).epsilon(1e-10));
    }
    for (int i = 0; i < n; ++i) {
      CHECK(res.residuals(i) == doctest::Approx(u[i]).epsilon(1e-10));
    }
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        CHECK(res.hac_cov(a, b) ==
              doctest::Approx(V[a][b]).epsilon(1e-10).scale(1e-10));
      }
    }
  }
}

TEST_CASE("automatic bandwidth matches the plug-in oracle") {
  std::mt19937 rng(11);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 20 + trial * 6;
    Eigen::MatrixXd scores(n, 2);
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
      e = 0.6 * e + noise(rng);
      scores(i, 0) = e;
      scores(i, 1) = noise(rng);
    }
    CHECK(nw_auto_bandwidth(scores) == oracle::nw_bandwidth(to_oracle(scores)));
  }
}

TEST_CASE("persistent scores force a positive bandwidth") {
  Eigen::MatrixXd scores(200, 1);
  double e = 1.0;
  for (int i = 0; i < 200; ++i) {
    scores(i, 0) = e;
    e *= 0.9;
  }
  CHECK(nw_auto_bandwidth(scores) > 0);
  CHECK_THROWS_AS(nw_auto_bandwidth(Eigen::MatrixXd::Ones(3, 1)),
                  TooFewObservationsError);
}

TEST_CASE("HAC degenerate cases") {
  Eigen::MatrixXd X = Eigen::MatrixXd::Ones(6, 1);
  SUBCASE("zero residuals give a zero matrix") {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(6);
    CHECK(nw_hac_cov(X, u, 2)(0, 0) == 0.0);
  }
  SUBCASE("bandwidth 0 collapses to the heteroskedastic sandwich") {
    Eigen::VectorXd u(6);
    u << 0.5, -0.2, 0.1, 0.9, -0.7, 0.3;
    double expect = u.array().square().sum() / 36.0;  // (1/n^2) sum u^2
    CHECK(nw_hac_cov(X, u, 0)(0, 0) == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("HAC covariance is symmetric, PSD on the diagonal, and scale "
          "equivariant") {
  std::mt19937 rng(3);
  std::normal_distribution<double> noise(0.0, 1.0);
  Eigen::MatrixXd X(12, 2);
  Eigen::VectorXd u(12);
  for (int i = 0; i < 12; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = noise(rng);
    u(i) = noise(rng);
  }
  Eigen::MatrixXd V = nw_hac_cov(X, u, 2);
  CHECK((V - V.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(V(0, 0) >= 0.0);
  CHECK(V(1, 1) >= 0.0);
  // Scaling residuals by c scales the covariance by c^2.
  Eigen::MatrixXd V2 = nw_hac_cov(X, (3.0 * u).eval(), 2);
  CHECK((V2 - 9.0 * V).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("Wald test behavior") {
  Eigen::MatrixXd X(10, 2);
  Eigen::VectorXd y(10);
  std::mt19937 rng(5);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = noise(rng);
    y(i) = 0.3 + 1.2 * X(i, 1) + noise(rng);
  }
  auto res = ols_hac(X, y, 1);

  SUBCASE("satisfied restriction gives W = 0, p = 1") {
    Eigen::MatrixXd R = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd r = res.coef;
    auto rep = wald_test(res, R, r);
    CHECK(rep.statistic == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(rep.p_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.df == 2);
  }
  SUBCASE("scalar Wald equals the squared t statistic") {
    Eigen::MatrixXd R(1, 2);
    R << 0.0, 1.0;
    Eigen::VectorXd r(1);
    r << 1.0;
    auto w = wald_test(res, R, r);
    auto t = t_test(res, 1, 1.0, Alternative::TwoSided);
    CHECK(w.statistic ==
          doctest::Approx(t.statistic * t.statistic).epsilon(1e-10));
  }
  SUBCASE("singular restriction covariance throws") {
    RegressionResult degenerate = res;
    degenerate.hac_cov = Eigen::MatrixXd::Zero(2, 2);
    Eigen::MatrixXd R = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd r = Eigen::VectorXd::Zero(2);
    CHECK_THROWS_AS(wald_test(degenerate, R, r), SingularRestrictionError);
  }
}

TEST_CASE("t test p-values") {
  RegressionResult res;
  res.coef = Eigen::VectorXd::Zero(1);
  res.hac_cov = Eigen::MatrixXd::Ones(1, 1);
  res.n = 10;

  SUBCASE("coefficient at the null gives t = 0, p = 1") {
    auto rep = t_test(res, 0, 0.0, Alternative::TwoSided);
    CHECK(rep.statistic == 0.0);
    CHECK(rep.p_value == doctest::Approx(1.0));
  }
  SUBCASE("t = -1.645 one-sided less gives p near 0.05") {
    res.coef(0) = -1.645;
    auto rep = t_test(res, 0, 0.0, Alternative::Less);
    CHECK(rep.statistic == doctest::Approx(-1.645));
    CHECK(rep.p_value == doctest::Approx(0.05).epsilon(2e-3));
  }
  SUBCASE("two-sided p is twice the smaller one-sided p") {
    for (double b : {-0.8, 0.3, 1.7}) {
      res.coef(0) = b;
      double lo = t_test(res, 0, 0.0, Alternative::Less).p_value;
      double hi = t_test(res, 0, 0.0, Alternative::Greater).p_value;
      double two = t_test(res, 0, 0.0, Alternative::TwoSided).p_value;
      CHECK(two == doctest::Approx(2.0 * std::min(lo, hi)).epsilon(1e-12));
    }
  }
  SUBCASE("zero variance throws") {
    res.hac_cov(0, 0) = 0.0;
    CHECK_THROWS_AS(t_test(res, 0, 0.0, Alternative::TwoSided),
                    ZeroVarianceError);
  }
}
