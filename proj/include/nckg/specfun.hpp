#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nckg {

/// Dense real polynomial, lowest degree first. Trailing exact zeros are
/// trimmed so degree() is the true degree; the zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// i-th coefficient, zero beyond the stored degree.
  double coeff(int i) const;
  std::span<const double> coeffs() const { return coeffs_; }

  double operator()(double x) const;  // Horner
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& p);

  std::string to_string() const;

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 607/128, 15 terms).
double lgamma(double x);

/// Rising factorial (x)_n as a plain product.
double pochhammer(double x, int n);

/// Associated Laguerre L_n^a(x) by the upward three-term recurrence.
double laguerre(int n, double a, double x);

/// Terminating Kummer series 1F1(-n; g; x) = sum_j (-n)_j x^j / ((g)_j j!).
double kummer_terminating(int n, double g, double x);

/// Closed form of  int_0^inf x^(p-1) e^-x [1F1(-n; g; x)]^2 dx ,
///   n! Gamma(p) / (g)_n * sum_{j=0..n} [n!/(n-j)!] (g-p-j)_{2j} / ((j!)^2 (g)_j).
/// Throws DivergentMoment for p <= 0.
double laguerre_weighted_moment(int n, double g, double p);

}  // namespace nckg
