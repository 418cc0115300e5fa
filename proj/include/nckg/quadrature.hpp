#pragma once

#include <functional>
#include <vector>

#include "nckg/core.hpp"
#include "nckg/radial.hpp"

namespace nckg {

/// Generalized Gauss-Laguerre rule for the weight x^a e^-x on [0, inf).
struct QuadratureRule {
  int order = 0;
  double weight_exponent = 0.0;
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive (may underflow to 0 past order ~180)

  /// sum_i w_i f(x_i), approximating int x^a e^-x f(x) dx.
  template <class F>
  double apply(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Golub-Welsch eigenvalues polished by Newton on L_order^a, with weights
/// from  w_i = Gamma(N+a+1) x_i / (N! (N+a)^2 [L_{N-1}^a(x_i)]^2).
/// 1 <= order <= 200; a <= -1 is a DomainError.
QuadratureRule gauss_laguerre_rule(int order, double a);

struct HalflineOptions {
  double abs_tol = 1e-12;
  double rel_tol = 0.0;
  /// Length scale of the integrand; breakpoints are placed relative to it.
  double scale = 1.0;
  int max_intervals = 4000;
};

/// Adaptive Gauss-Kronrod (7/15) on [0, inf). Before integrating, the
/// region near the origin is probed at scale * 10^{-3k}, k = 1..4; the
/// integrand is rejected with DivergentIntegral if the partial integral of
/// |f| grows more than 10x across those three refinements, or if the
/// decade-block increments stop shrinking (local power x^s with s <= -0.98).
/// Converged means abs_error_estimate <= max(abs_tol, rel_tol * |value|).
IntegralResult integrate_halfline(const std::function<double(double)>& f,
                                  const HalflineOptions& opts = {});
IntegralResult integrate_halfline(const std::function<double(double)>& f, double tol);

/// int_0^inf R(r)^2 r^-k dr. Substituting x = 2 a r moves x^(2s+2-k) into
/// the quadrature weight, leaving the polynomial [L_n^(2s+1)]^2, which a rule
/// of order n + 2 integrates exactly. Exponent 2s+2-k <= -1 raises
/// DivergentMoment.
IntegralResult radial_moment_oracle(const RadialWavefunction& w, int k);

}  // namespace nckg
