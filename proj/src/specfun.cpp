#include "nckg/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nckg/core.hpp"

namespace nckg {

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0.0;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const int n = std::max(a.degree(), b.degree()) + 1;
  std::vector<double> c(n);
  for (int i = 0; i < n; ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& p) {
  std::vector<double> c(p.coeffs_);
  for (auto& v : c) v *= s;
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << " + ";
    os << coeffs_[i];
    if (i == 1) os << "*r";
    if (i > 1) os << "*r^" << i;
  }
  return os.str();
}

namespace {

// Lanczos coefficients for g = 607/128, N = 15 (Godfrey / Boost set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

}  // namespace

double lgamma(double x) {
  if (!(x > 0.0)) throw DomainError("lgamma requires x > 0");
  // Exact zeros of ln Gamma; the series leaves ~1e-16 residue there.
  if (x == 1.0 || x == 2.0) return 0.0;
  // The approximation loses relative accuracy close to the zeros of
  // ln Gamma; shifting the argument up keeps that region away from 1 and 2.
  if (x < 3.0) {
    double prod = 1.0;
    double z = x;
    while (z < 3.0) {
      prod *= z;
      z += 1.0;
    }
    return lgamma(z) - std::log(prod);
  }
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double pochhammer(double x, int n) {
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= x + i;
  return p;
}

double laguerre(int n, double a, double x) {
  if (n < 0) throw DomainError("laguerre degree must be >= 0");
  if (!(a > -1.0)) throw DomainError("laguerre parameter must exceed -1");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * curr - (k + a) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double kummer_terminating(int n, double g, double x) {
  if (n < 0) throw DomainError("kummer_terminating requires n >= 0");
  if (!(g > 0.0)) throw DomainError("kummer_terminating requires g > 0");
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < n; ++j) {
    term *= (j - n) * x / ((g + j) * (j + 1.0));
    sum += term;
  }
  return sum;
}

double laguerre_weighted_moment(int n, double g, double p) {
  if (n < 0) throw DomainError("moment series requires n >= 0");
  if (!(g > 0.0)) throw DomainError("moment series requires g > 0");
  if (!(p > 0.0))
    throw DivergentMoment("int x^(p-1) e^-x F^2 dx diverges at the origin for p = " +
                          std::to_string(p));
  // Term ratio t_j / t_{j-1} = (n-j+1)(g-p-j)(g-p+j-1) / (j^2 (g+j-1)).
  const double d = g - p;
  double term = 1.0;
  double sum = 1.0;
  for (int j = 1; j <= n; ++j) {
    term *= (n - j + 1.0) * (d - j) * (d + j - 1.0) / (static_cast<double>(j) * j * (g + j - 1.0));
    if (term == 0.0) break;  // (d-j)_{2j} picked up a zero factor; every later term has it too
    sum += term;
  }
  const double log_prefactor = lgamma(n + 1.0) + lgamma(p) - (lgamma(g + n) - lgamma(g));
  return std::exp(log_prefactor) * sum;
}

}  // namespace nckg
