#pragma once

#include "nckg/core.hpp"
#include "nckg/kgnc.hpp"
#include "nckg/radial.hpp"

namespace nckg {

/// Schroedinger hydrogen state, labelled by the principal quantum number.
/// Deliberately a different type from QuantumNumbers (radial labelling).
class HydrogenState {
 public:
  HydrogenState(int n_principal, int l, int m_l);
  int n_principal() const { return n_; }
  int l() const { return l_; }
  int m_l() const { return m_l_; }
  int radial_degree() const { return n_ - l_ - 1; }
  HydrogenState with_m_l(int m) const { return {n_, l_, m}; }

 private:
  int n_, l_, m_l_;
};

/// a_B = 1/(m_e alpha) in natural units.
double bohr_radius(const PhysicalConstants& c);

/// epsilon_n = -m_e alpha^2 / (2 n^2), natural units.
double bohr_energy(const HydrogenState& s, const PhysicalConstants& c);

RadialWavefunction hydrogen_wavefunction(const HydrogenState& s, const PhysicalConstants& c);

/// Hydrogenic <r^-k> as printed (f(4) valid for l >= 1, f(5), f(6) for l >= 2).
double hydrogen_moment_printed(const HydrogenState& s, const PhysicalConstants& c, int k);

/// k in {4, 5, 6}; throws DivergentMoment outside l >= 1 (k = 4) / l >= 2.
MomentComparison hydrogen_moment_closed(const HydrogenState& s, const PhysicalConstants& c, int k);

double nr_shift_first_order(const HydrogenState& s, const PhysicalConstants& c);
/// -(alpha^3/5) 2 m_e f(5) theta^2 (the factor 2 m_e as printed for this limit).
double nr_shift_second_order_f5(const HydrogenState& s, const PhysicalConstants& c);
double nr_shift_second_order_f6(const HydrogenState& s, const PhysicalConstants& c, AngularMode mode);

/// Delta E^NC; e0 holds epsilon_n.
EnergyBreakdown nr_energy_shift(const HydrogenState& s, const PhysicalConstants& c,
                                AngularMode mode = AngularMode::spherical_average_2_3);

/// Energy factor multiplying the theta^2/r^5 term in the non-relativistic
/// radial equation: 2 m_e.
inline constexpr double kNonRelativisticEnergyFactor = 2.0;

/// |(E^0_{n_r,l} - m_e) / epsilon_{n_r + l + 1} - 1|.
double nonrel_consistency(int n_r, int l, const PhysicalConstants& c);

}  // namespace nckg
