#include <doctest.h>

#include <initializer_list>

#include <cmath>

#include "feval/dist.hpp"

using namespace feval;

TEST_CASE("normal CDF reference values") {
  CHECK(norm_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(norm_cdf(-1.6449) == doctest::Approx(0.05).epsilon(1e-3));
  CHECK(norm_cdf(1.959964) == doctest::Approx(0.975).epsilon(1e-6));
  CHECK(norm_cdf(-8.0) == doctest::Approx(6.22096e-16).epsilon(1e-4));
  CHECK(norm_cdf(1.0) + norm_cdf(-1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("chi-square tail with 2 df is exp(-x/2)") {
  for (double x : {0.0, 0.1, 1.0, 2.5, 5.991, 10.0, 40.0}) {
    CHECK(chi2_sf(x, 2) == doctest::Approx(std::exp(-x / 2)).epsilon(1e-12));
  }
}

TEST_CASE("chi-square tail reference values") {
  CHECK(chi2_sf(3.841459, 1) == doctest::Approx(0.05).epsilon(1e-5));
  CHECK(chi2_sf(5.991465, 2) == doctest::Approx(0.05).epsilon(1e-5));
  CHECK(chi2_sf(9.487729, 4) == doctest::Approx(0.05).epsilon(1e-5));
  CHECK(chi2_sf(13.276704, 4) == doctest::Approx(0.01).epsilon(1e-5));
  CHECK(chi2_sf(0.0, 4) == doctest::Approx(1.0));
}

TEST_CASE("chi-square tail with 1 df matches the normal tail") {
  // Q(z^2; 1) = 2 (1 - Phi(z)).
  for (double z : {0.5, 1.0, 1.96, 3.0}) {
    CHECK(chi2_sf(z * z, 1) ==
          doctest::Approx(2.0 * (1.0 - norm_cdf(z))).epsilon(1e-10));
  }
}

TEST_CASE("incomplete gamma halves sum to one") {
  for (double a : {0.5, 1.0, 2.0, 7.5}) {
    for (double x : {0.2, 1.0, 4.0, 25.0}) {
      CHECK(gamma_p(a, x) + gamma_q(a, x) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("tail probabilities are monotone in the statistic") {
  double prev = 1.0;
  for (double x = 0.0; x <= 30.0; x += 0.5) {
    double p = chi2_sf(x, 3);
    CHECK(p <= prev + 1e-15);
    prev = p;
  }
}
