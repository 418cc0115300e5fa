#pragma once

#include <string>

#include "nckg/core.hpp"
#include "nckg/radial.hpp"

namespace nckg {

/// How <(theta^{ij} x_j)^2> = theta^2 r^2 <1 - cos^2> is averaged.
enum class AngularMode {
  spherical_average_2_3,  // <1 - cos^2> = 2/3, reproduces the 29/24 factor
  exact_lm,               // Y_lm matrix element, depends on l and m_l
};

std::string to_string(AngularMode m);
AngularMode angular_mode_from_string(const std::string& s);

/// <1 - cos^2 theta_polar> in the state (l, m_l) under the given mode.
double transverse_angular_factor(int l, int m_l, AngularMode mode);

/// Coefficient C in  shift_theta2_f6 = -C alpha^4 f(6) theta^2:
/// (1/16) * angular factor + 1/5. Equals 29/120 in the spherical mode.
double f6_coefficient(int l, int m_l, AngularMode mode);

/// nu = -1/2 + sqrt((l+1/2)^2 - alpha^2), evaluated as l - alpha^2/(gamma + l + 1/2).
double nu_exponent(int l, double alpha);

/// E^0_{n,l} / m_e from the NU eigenvalue condition.
double unperturbed_energy(const QuantumNumbers& q, const PhysicalConstants& c);
/// Same level via m_e / sqrt(1 + alpha^2 / N^2), N = n + 1/2 + gamma.
double unperturbed_energy_sommerfeld(const QuantumNumbers& q, const PhysicalConstants& c);

/// a = sqrt(m_e^2 - E^2) = alpha E / N (natural units).
double decay_constant(const QuantumNumbers& q, const PhysicalConstants& c);

RadialWavefunction radial_wavefunction(const QuantumNumbers& q, const PhysicalConstants& c);

/// <r^-k> for a Laguerre-form state (degree n, exponent s, decay a) via
/// the finite moment series with g = 2s+2, p = 2s+3-k:
///   (2a)^k n! / (2 (n+s+1) Gamma(n+2s+2)) [Gamma(n+2s+2)/(n! Gamma(2s+2))]^2 W(n, g, p).
/// Throws DivergentMoment when p <= 0 (k >= 2s+3).
double laguerre_state_moment(int n, double s, double a, int k);

/// The f(4), f(5), f(6) expressions exactly as printed for the relativistic
/// states (f(6) carries the printed a^5 and repeated bracket terms).
double moment_printed_relativistic(const QuantumNumbers& q, const PhysicalConstants& c, int k);

/// closed_form from laguerre_state_moment, oracle from radial_moment_oracle,
/// paper_fidelity from moment_printed_relativistic. k in {4, 5, 6}.
MomentComparison moment_closed(const QuantumNumbers& q, const PhysicalConstants& c, int k);

// Individual shift terms (natural units). Each throws DivergentMoment when
// its moment diverges. shift_first_order is identically 0 for m_l = 0.
double shift_first_order(const QuantumNumbers& q, const PhysicalConstants& c);
double shift_second_order_f5(const QuantumNumbers& q, const PhysicalConstants& c);
double shift_second_order_f6(const QuantumNumbers& q, const PhysicalConstants& c, AngularMode mode);

/// Delta E^nc terms; theta = 0 short-circuits to zero shifts.
EnergyBreakdown energy_shift_nc(const QuantumNumbers& q, const PhysicalConstants& c,
                                AngularMode mode = AngularMode::spherical_average_2_3);

/// E^0 plus the theta shifts, all in natural units.
EnergyBreakdown total_energy(const QuantumNumbers& q, const PhysicalConstants& c,
                             AngularMode mode = AngularMode::spherical_average_2_3);

enum class SpinBranch { plus, minus };

/// l -> +-(j + 1/2), n -> n - j - 1/2, with j = two_j / 2 (two_j odd).
/// Non-representable results (negative l or n, |m_l| > l) are DomainErrors.
QuantumNumbers spin_mapped_quantum_numbers(const QuantumNumbers& q, int two_j, SpinBranch branch);
/// Inverse of the n substitution: n + j + 1/2.
int spin_unmapped_n(int mapped_n, int two_j);

}  // namespace nckg
