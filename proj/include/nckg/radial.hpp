#pragma once

namespace nckg {

/// Bound-state radial function of Laguerre form
///   R(r) = norm * x^(s+1) e^(-x/2) L_n^(2s+1)(x),  x = 2 a r,
///   norm = sqrt(a / (n + s + 1)) * sqrt(n! / Gamma(n + 2s + 2)).
/// Relativistic states use s = nu, a = sqrt(m_e^2 - E^2); hydrogenic ones
/// use s = l, a = 1 / (a_B n_principal). Both normalize to 1 on [0, inf).
struct RadialWavefunction {
  enum class Kind { relativistic, hydrogenic };

  Kind kind = Kind::relativistic;
  int n = 0;                    // Laguerre degree = radial quantum number
  double effective_exponent = 0; // s
  double a = 1.0;               // decay constant
  double norm = 1.0;

  static RadialWavefunction make(Kind kind, int n, double s, double a);

  double x_of(double r) const { return 2.0 * a * r; }
  double laguerre_parameter() const { return 2.0 * effective_exponent + 1.0; }
  double operator()(double r) const;
};

}  // namespace nckg
