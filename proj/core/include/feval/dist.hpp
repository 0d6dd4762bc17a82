#pragma once

namespace feval {

/// Standard normal CDF, accurate to ~1e-15 via erfc.
double norm_cdf(double x);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Chi-square upper-tail probability with df degrees of freedom.
double chi2_sf(double x, int df);

}  // namespace feval
