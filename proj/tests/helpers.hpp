#pragma once

#include <cmath>

namespace testing_support {

inline double rel_diff(double a, double b) { return b == 0.0 ? std::abs(a) : std::abs(a - b) / std::abs(b); }

// Explicit-sum Laguerre L_n^a(x) = sum_j (-1)^j C(n+a, n-j) x^j / j!.
inline double laguerre_sum(int n, double a, double x, double* magnitude = nullptr) {
  double s = 0.0, m = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double binom = std::exp(std::lgamma(n + a + 1.0) - std::lgamma(n - j + 1.0) - std::lgamma(a + j + 1.0));
    const double term = binom * std::pow(x, j) / std::tgamma(j + 1.0);
    s += (j % 2 ? -term : term);
    m += term;
  }
  if (magnitude) *magnitude = m;
  return s;
}

inline constexpr double kAlpha = 1.0 / 137.035999;

}  // namespace testing_support
