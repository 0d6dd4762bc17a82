#pragma once

// Brute-force reference implementations, deliberately independent of the
// library's linear-algebra path: plain Gaussian elimination on the normal
// equations and direct summation for the HAC pieces.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;
using Vector = std::vector<double>;

inline Vector solve(Matrix A, Vector b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(A[r][col]) > std::fabs(A[pivot][col])) pivot = r;
    }
    if (std::fabs(A[pivot][col]) < 1e-300) {
      throw std::runtime_error("oracle: singular system");
    }
    std::swap(A[col], A[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = A[r][col] / A[col][col];
      for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

inline Matrix inverse(const Matrix& A) {
  const int n = static_cast<int>(A.size());
  Matrix inv(n, Vector(n, 0.0));
  for (int j = 0; j < n; ++j) {
    Vector e(n, 0.0);
    e[j] = 1.0;
    Vector col = solve(A, e);
    for (int i = 0; i < n; ++i) inv[i][j] = col[i];
  }
  return inv;
}

/// OLS via the normal equations X'X beta = X'y.
inline Vector ols(const Matrix& X, const Vector& y) {
  const int n = static_cast<int>(X.size());
  const int k = static_cast<int>(X[0].size());
  Matrix xtx(k, Vector(k, 0.0));
  Vector xty(k, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < k; ++a) {
      xty[a] += X[i][a] * y[i];
      for (int b = 0; b < k; ++b) xtx[a][b] += X[i][a] * X[i][b];
    }
  }
  return solve(xtx, xty);
}

inline Vector residuals(const Matrix& X, const Vector& y, const Vector& beta) {
  Vector u(y.size());
  for (size_t i = 0; i < y.size(); ++i) {
    double fit = 0.0;
    for (size_t a = 0; a < beta.size(); ++a) fit += X[i][a] * beta[a];
    u[i] = y[i] - fit;
  }
  return u;
}

/// Bartlett-kernel HAC sandwich with fixed bandwidth m, by direct summation.
inline Matrix hac_cov(const Matrix& X, const Vector& u, int m) {
  const int n = static_cast<int>(X.size());
  const int k = static_cast<int>(X[0].size());
  Matrix S(k, Vector(k, 0.0));
  for (int j = 0; j <= m; ++j) {
    double w = 1.0 - static_cast<double>(j) / (m + 1);
    for (int i = j; i < n; ++i) {
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          double term = X[i][a] * u[i] * X[i - j][b] * u[i - j];
          S[a][b] += w * term;
          if (j > 0) S[b][a] += w * term;
        }
      }
    }
  }
  Matrix xtx(k, Vector(k, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) xtx[a][b] += X[i][a] * X[i][b];
    }
  }
  Matrix bread = inverse(xtx);
  Matrix tmp(k, Vector(k, 0.0));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (int c = 0; c < k; ++c) tmp[a][b] += bread[a][c] * S[c][b];
    }
  }
  Matrix V(k, Vector(k, 0.0));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (int c = 0; c < k; ++c) V[a][b] += tmp[a][c] * bread[c][b];
    }
  }
  return V;
}

/// Automatic bandwidth of Newey-West (1994) on unit-weighted score row sums.
inline int nw_bandwidth(const Matrix& scores) {
  const int n = static_cast<int>(scores.size());
  Vector f(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (double s : scores[i]) f[i] += s;
  }
  auto sigma = [&](int j) {
    double acc = 0.0;
    for (int i = j; i < n; ++i) acc += f[i] * f[i - j];
    return acc / n;
  };
  int n_pre = static_cast<int>(std::floor(4.0 * std::pow(n / 100.0, 2.0 / 9.0)));
  double s0 = sigma(0);
  double s1 = 0.0;
  for (int j = 1; j <= n_pre; ++j) {
    double sj = sigma(j);
    s0 += 2.0 * sj;
    s1 += 2.0 * j * sj;
  }
  if (s0 == 0.0 || s1 <= 0.0) return 0;
  double gamma = 1.1447 * std::pow((s1 / s0) * (s1 / s0) * n, 1.0 / 3.0);
  int m = static_cast<int>(std::floor(gamma));
  return std::min(m, n - 1);
}

}  // namespace oracle
