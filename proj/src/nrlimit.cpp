#include "nckg/nrlimit.hpp"

#include <cmath>

#include "nckg/quadrature.hpp"

namespace nckg {

HydrogenState::HydrogenState(int n_principal, int l, int m_l) : n_(n_principal), l_(l), m_l_(m_l) {
  if (n_principal < 1) throw DomainError("principal quantum number must be >= 1");
  if (l < 0 || l > n_principal - 1) throw DomainError("l must lie in [0, n - 1]");
  if (std::abs(m_l) > l) throw DomainError("|m_l| must not exceed l");
}

double bohr_radius(const PhysicalConstants& c) { return 1.0 / c.alpha; }

double bohr_energy(const HydrogenState& s, const PhysicalConstants& c) {
  const double n = s.n_principal();
  return -c.alpha * c.alpha / (2.0 * n * n);
}

RadialWavefunction hydrogen_wavefunction(const HydrogenState& s, const PhysicalConstants& c) {
  c.validate();
  return RadialWavefunction::make(RadialWavefunction::Kind::hydrogenic, s.radial_degree(), s.l(),
                                  1.0 / (bohr_radius(c) * s.n_principal()));
}

namespace {

void require_valid(const HydrogenState& s, int k) {
  if (k < 4 || k > 6) throw DomainError("moment order k must be 4, 5 or 6");
  const int min_l = k == 4 ? 1 : 2;
  if (s.l() < min_l)
    throw DivergentMoment("hydrogenic <r^-" + std::to_string(k) + "> requires l >= " + std::to_string(min_l));
}

}  // namespace

double hydrogen_moment_printed(const HydrogenState& s, const PhysicalConstants& c, int k) {
  require_valid(s, k);
  const double a = bohr_radius(c);
  const double n = s.n_principal();
  const double l = s.l();
  const double n5 = std::pow(n, 5);
  const double ll = l * (l + 1.0);
  const double q = 3.0 * n * n - ll;
  if (k == 4)
    return 4.0 / (std::pow(a, 4) * n5 * ll * (2 * l - 1) * (2 * l + 1) * (2 * l + 3)) * q;
  if (k == 5)
    return 4.0 / (3.0 * std::pow(a, 5) * n5 * (l - 1) * l * (l + 1) * (l + 2) * (2 * l + 1)) *
           (-1.0 + 5.0 * q / ((2 * l - 1) * (2 * l + 3)));
  return 4.0 / (std::pow(a, 6) * n5 * ll * (2 * l - 3) * (2 * l + 1) * (2 * l + 5)) *
         (-7.0 / (3.0 * (l - 1) * (l + 2)) - 3.0 * q / (n * n * (2 * l - 1) * (2 * l + 3)) +
          35.0 * q / (3.0 * (l - 1) * (l + 2) * (2 * l - 1) * (2 * l + 1) * (2 * l + 3)));
}

MomentComparison hydrogen_moment_closed(const HydrogenState& s, const PhysicalConstants& c, int k) {
  require_valid(s, k);
  const auto w = hydrogen_wavefunction(s, c);
  MomentComparison m;
  m.k = k;
  m.closed_form = laguerre_state_moment(w.n, w.effective_exponent, w.a, k);
  m.oracle = radial_moment_oracle(w, k);
  m.rel_discrepancy = std::abs(m.closed_form - m.oracle.value) / std::abs(m.oracle.value);
  m.paper_fidelity = hydrogen_moment_printed(s, c, k);
  m.paper_discrepancy = std::abs(*m.paper_fidelity - m.oracle.value) / std::abs(m.oracle.value);
  return m;
}

namespace {

double closed_moment(const HydrogenState& s, const PhysicalConstants& c, int k) {
  require_valid(s, k);
  const auto w = hydrogen_wavefunction(s, c);
  return laguerre_state_moment(w.n, w.effective_exponent, w.a, k);
}

}  // namespace

double nr_shift_first_order(const HydrogenState& s, const PhysicalConstants& c) {
  if (s.m_l() == 0) return 0.0;
  return -(c.alpha * c.alpha / 2.0) * s.m_l() * c.theta_natural() * closed_moment(s, c, 4);
}

double nr_shift_second_order_f5(const HydrogenState& s, const PhysicalConstants& c) {
  const double theta = c.theta_natural();
  return -(c.alpha * c.alpha * c.alpha / 5.0) * theta * theta * kNonRelativisticEnergyFactor *
         closed_moment(s, c, 5);
}

double nr_shift_second_order_f6(const HydrogenState& s, const PhysicalConstants& c, AngularMode mode) {
  const double theta = c.theta_natural();
  const double a2 = c.alpha * c.alpha;
  return -f6_coefficient(s.l(), s.m_l(), mode) * a2 * a2 * theta * theta * closed_moment(s, c, 6);
}

EnergyBreakdown nr_energy_shift(const HydrogenState& s, const PhysicalConstants& c, AngularMode mode) {
  c.validate();
  const double e0 = bohr_energy(s, c);
  if (c.theta_ev2 == 0.0) return EnergyBreakdown::from_terms(e0, 0.0, 0.0, 0.0);
  return EnergyBreakdown::from_terms(e0, nr_shift_first_order(s, c), nr_shift_second_order_f5(s, c),
                                     nr_shift_second_order_f6(s, c, mode));
}

double nonrel_consistency(int n_r, int l, const PhysicalConstants& c) {
  const HydrogenState h(n_r + l + 1, l, 0);  // rejects n_r < 0, l < 0
  const double big_n = n_r + 1.0 + nu_exponent(l, c.alpha);
  // E^0 - m_e = (1 + alpha^2/N^2)^(-1/2) - 1 without cancellation.
  const double binding = std::expm1(-0.5 * std::log1p(c.alpha * c.alpha / (big_n * big_n)));
  return std::abs(binding / bohr_energy(h, c) - 1.0);
}

}  // namespace nckg
