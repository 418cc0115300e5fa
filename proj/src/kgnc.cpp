#include "nckg/kgnc.hpp"

#include <cmath>

#include "nckg/quadrature.hpp"
#include "nckg/specfun.hpp"

namespace nckg {

std::string to_string(AngularMode m) {
  return m == AngularMode::exact_lm ? "exact_lm" : "spherical_average_2_3";
}

AngularMode angular_mode_from_string(const std::string& s) {
  if (s == "spherical" || s == "spherical_average_2_3") return AngularMode::spherical_average_2_3;
  if (s == "exact" || s == "exact_lm") return AngularMode::exact_lm;
  throw DomainError("unknown angular mode '" + s + "'");
}

double transverse_angular_factor(int l, int m_l, AngularMode mode) {
  if (mode == AngularMode::spherical_average_2_3) return 2.0 / 3.0;
  const double cos2 = (2.0 * l * l + 2.0 * l - 1.0 - 2.0 * m_l * m_l) / ((2.0 * l - 1.0) * (2.0 * l + 3.0));
  return 1.0 - cos2;
}

double f6_coefficient(int l, int m_l, AngularMode mode) {
  if (mode == AngularMode::spherical_average_2_3) return 29.0 / 120.0;
  return transverse_angular_factor(l, m_l, mode) / 16.0 + 1.0 / 5.0;
}

namespace {

double gamma_of(int l, double alpha) {
  const double h = l + 0.5;
  const double g2 = h * h - alpha * alpha;
  if (!(g2 > 0.0))
    throw DomainError("(l + 1/2)^2 - alpha^2 must be positive (l = " + std::to_string(l) + ")");
  return std::sqrt(g2);
}

// Principal-like number N = n + 1/2 + gamma.
double sommerfeld_n(const QuantumNumbers& q, double alpha) { return q.n() + 0.5 + gamma_of(q.l(), alpha); }

void require_k(int k) {
  if (k < 4 || k > 6) throw DomainError("moment order k must be 4, 5 or 6");
}

}  // namespace

double nu_exponent(int l, double alpha) {
  if (l < 0) throw DomainError("l must be >= 0");
  const double g = gamma_of(l, alpha);
  return l - alpha * alpha / (g + l + 0.5);
}

double unperturbed_energy(const QuantumNumbers& q, const PhysicalConstants& c) {
  c.validate();
  const double g = gamma_of(q.l(), c.alpha);
  const double nh = q.n() + 0.5;
  const double lh = q.l() + 0.5;
  return (nh + g) / std::sqrt(nh * nh + lh * lh + 2.0 * nh * g);
}

double unperturbed_energy_sommerfeld(const QuantumNumbers& q, const PhysicalConstants& c) {
  c.validate();
  const double big_n = sommerfeld_n(q, c.alpha);
  return 1.0 / std::sqrt(1.0 + c.alpha * c.alpha / (big_n * big_n));
}

double decay_constant(const QuantumNumbers& q, const PhysicalConstants& c) {
  return c.alpha * unperturbed_energy_sommerfeld(q, c) / sommerfeld_n(q, c.alpha);
}

RadialWavefunction radial_wavefunction(const QuantumNumbers& q, const PhysicalConstants& c) {
  return RadialWavefunction::make(RadialWavefunction::Kind::relativistic, q.n(), nu_exponent(q.l(), c.alpha),
                                  decay_constant(q, c));
}

double laguerre_state_moment(int n, double s, double a, int k) {
  const double g = 2.0 * s + 2.0;
  const double p = 2.0 * s + 3.0 - k;
  if (!(p > 0.0))
    throw DivergentMoment("<r^-" + std::to_string(k) + "> diverges: requires k < 2s + 3 = " +
                          std::to_string(2.0 * s + 3.0));
  const double lg_top = lgamma(n + g);
  const double log_pref = k * std::log(2.0 * a) + lgamma(n + 1.0) - std::log(2.0 * (n + s + 1.0)) - lg_top +
                          2.0 * (lg_top - lgamma(n + 1.0) - lgamma(g));
  return std::exp(log_pref) * laguerre_weighted_moment(n, g, p);
}

double moment_printed_relativistic(const QuantumNumbers& q, const PhysicalConstants& c, int k) {
  require_k(k);
  const double nu = nu_exponent(q.l(), c.alpha);
  const double a = decay_constant(q, c);
  const double n = q.n();
  const double t1 = 3.0 * n / (nu + 1.0);
  if (k == 4) {
    const double bracket = 1.0 + t1 + 3.0 * n * (n - 1.0) / ((nu + 1.0) * (2.0 * nu + 3.0));
    return 4.0 * std::pow(a, 4) / ((2.0 * nu - 1.0) * nu * (2.0 * nu + 1.0) * (n + nu + 1.0)) * bracket;
  }
  const double pre = 4.0 * std::pow(a, 5) / ((2.0 * nu - 1.0) * (nu - 1.0) * nu * (2.0 * nu + 1.0) * (n + nu + 1.0));
  const double u2 = 15.0 * n * (n - 1.0) / ((nu + 1.0) * (2.0 * nu + 3.0));
  const double u3 = 5.0 * n * (n - 1.0) * (n - 2.0) / ((nu + 1.0) * (2.0 * nu + 3.0) * (nu + 2.0));
  double bracket = 1.0 + 6.0 * n / (nu + 1.0) + u2 + u3;
  if (k == 6) bracket += u2 + u3;  // the printed f(6) repeats these two terms
  return pre * bracket;
}

MomentComparison moment_closed(const QuantumNumbers& q, const PhysicalConstants& c, int k) {
  require_k(k);
  const auto w = radial_wavefunction(q, c);
  MomentComparison m;
  m.k = k;
  m.closed_form = laguerre_state_moment(q.n(), w.effective_exponent, w.a, k);
  m.oracle = radial_moment_oracle(w, k);
  m.rel_discrepancy = std::abs(m.closed_form - m.oracle.value) / std::abs(m.oracle.value);
  m.paper_fidelity = moment_printed_relativistic(q, c, k);
  m.paper_discrepancy = std::abs(*m.paper_fidelity - m.oracle.value) / std::abs(m.oracle.value);
  return m;
}

double shift_first_order(const QuantumNumbers& q, const PhysicalConstants& c) {
  if (q.m_l() == 0) return 0.0;  // theta L_z annihilates m_l = 0 before any radial integral
  const double theta = c.theta_natural();
  const auto w = radial_wavefunction(q, c);
  const double f4 = laguerre_state_moment(q.n(), w.effective_exponent, w.a, 4);
  return -(c.alpha * c.alpha * q.m_l() / 2.0) * f4 * theta;
}

double shift_second_order_f5(const QuantumNumbers& q, const PhysicalConstants& c) {
  const double theta = c.theta_natural();
  const auto w = radial_wavefunction(q, c);
  const double f5 = laguerre_state_moment(q.n(), w.effective_exponent, w.a, 5);
  return -(c.alpha * c.alpha * c.alpha / 5.0) * unperturbed_energy(q, c) * f5 * theta * theta;
}

double shift_second_order_f6(const QuantumNumbers& q, const PhysicalConstants& c, AngularMode mode) {
  const double theta = c.theta_natural();
  const auto w = radial_wavefunction(q, c);
  const double f6 = laguerre_state_moment(q.n(), w.effective_exponent, w.a, 6);
  const double a2 = c.alpha * c.alpha;
  return -f6_coefficient(q.l(), q.m_l(), mode) * a2 * a2 * f6 * theta * theta;
}

EnergyBreakdown energy_shift_nc(const QuantumNumbers& q, const PhysicalConstants& c, AngularMode mode) {
  c.validate();
  if (c.theta_ev2 == 0.0) return EnergyBreakdown::from_terms(0.0, 0.0, 0.0, 0.0);
  return EnergyBreakdown::from_terms(0.0, shift_first_order(q, c), shift_second_order_f5(q, c),
                                     shift_second_order_f6(q, c, mode));
}

EnergyBreakdown total_energy(const QuantumNumbers& q, const PhysicalConstants& c, AngularMode mode) {
  const auto shift = energy_shift_nc(q, c, mode);
  return EnergyBreakdown::from_terms(unperturbed_energy(q, c), shift.shift_theta1, shift.shift_theta2_f5,
                                     shift.shift_theta2_f6);
}

QuantumNumbers spin_mapped_quantum_numbers(const QuantumNumbers& q, int two_j, SpinBranch branch) {
  if (two_j <= 0 || two_j % 2 == 0) throw DomainError("j must be a positive half-integer");
  const int j_plus_half = (two_j + 1) / 2;
  const int l = branch == SpinBranch::plus ? j_plus_half : -j_plus_half;
  const int n = q.n() - j_plus_half;
  if (l < 0) throw DomainError("spin mapping l -> -(j + 1/2) gives negative l");
  if (n < 0) throw DomainError("spin mapping n -> n - j - 1/2 gives negative n");
  if (std::abs(q.m_l()) > l) throw DomainError("m_l does not fit the mapped l");
  return {n, l, q.m_l()};
}

int spin_unmapped_n(int mapped_n, int two_j) {
  if (two_j <= 0 || two_j % 2 == 0) throw DomainError("j must be a positive half-integer");
  return mapped_n + (two_j + 1) / 2;
}

}  // namespace nckg
