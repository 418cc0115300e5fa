#include "nckg/radial.hpp"

#include <cmath>

#include "nckg/core.hpp"
#include "nckg/specfun.hpp"

namespace nckg {

RadialWavefunction RadialWavefunction::make(Kind kind, int n, double s, double a) {
  if (n < 0) throw DomainError("radial degree must be >= 0");
  if (!(a > 0.0)) throw DomainError("decay constant must be positive");
  if (!(2.0 * s + 1.0 > -1.0)) throw DomainError("effective exponent must exceed -1");
  RadialWavefunction w;
  w.kind = kind;
  w.n = n;
  w.effective_exponent = s;
  w.a = a;
  w.norm = std::sqrt(a / (n + s + 1.0)) *
           std::exp(0.5 * (lgamma(n + 1.0) - lgamma(n + 2.0 * s + 2.0)));
  return w;
}

double RadialWavefunction::operator()(double r) const {
  if (r <= 0.0) return 0.0;
  const double x = x_of(r);
  return norm * std::exp((effective_exponent + 1.0) * std::log(x) - 0.5 * x) *
         laguerre(n, laguerre_parameter(), x);
}

}  // namespace nckg
