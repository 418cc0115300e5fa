#pragma once

#include <array>
#include <optional>

#include "nckg/core.hpp"
#include "nckg/kgnc.hpp"
#include "nckg/radial.hpp"

namespace nckg {

using Vec3 = std::array<double, 3>;

/// theta^{ij} theta^{ij} for theta^{ij} = eps^{ijk} theta_k with only
/// theta_3 = theta: 2 theta^2. This is the value of (theta^{ij})^2 that
/// reproduces the -(e^6/5 r^5) E theta^2 and -(e^8/5 r^6) theta^2 terms.
inline constexpr double kThetaContraction = 2.0;

/// Evaluation point. r and energy are in natural units (1/m_e, m_e);
/// theta is in eV^-2 and converted with the constants.
struct FieldPoint {
  double r = 1.0;
  std::optional<Vec3> position;  // |position| == r when present
  double theta_ev2 = 0.0;
  double energy = 1.0;           // E multiplying the theta^2/r^5 term
  int l = 0;                     // only used by AngularMode::exact_lm
  int m_l = 0;                   // L_z eigenvalue

  void validate() const;
};

/// a_0 = -e/r + e^5 theta^2 kThetaContraction / (20 r^5).
double a0_deformed(const FieldPoint& p, const PhysicalConstants& c);

/// a_i = e^3/(4 r^4) theta^{ij} x_j = e^3 theta/(4 r^4) (y, -x, 0), eps^{123} = +1.
Vec3 ai_deformed(const FieldPoint& p, const PhysicalConstants& c);

/// (theta^{ij} x_j)^2 in the expanded form theta^2 [(r^2 - z^2) - 2xy].
double theta_x_squared(const Vec3& x, double theta);

/// The four non-commutative terms of the radial equation at r, with
/// theta.L -> theta m_l and (theta^{ij} x_j)^2 -> theta^2 r^2 <1 - cos^2>.
struct PerturbationTerms {
  double angular_momentum = 0.0;  // -(e^4 / 2 r^4) theta m_l
  double energy_coupling = 0.0;   // -(e^6 / 5 r^5) E theta^2
  double transverse = 0.0;        // -(e^8 / 16 r^8) (theta^{ij} x_j)^2
  double contact = 0.0;           // -(e^8 / 5 r^6) theta^2

  double second_order() const { return energy_coupling + transverse + contact; }
  double sum() const { return angular_momentum + second_order(); }
};

PerturbationTerms perturbation_terms(const FieldPoint& p, const PhysicalConstants& c,
                                     AngularMode mode = AngularMode::spherical_average_2_3);

struct PerturbationExpectation {
  IntegralResult angular_momentum, energy_coupling, transverse, contact;
  double first_order() const { return angular_momentum.value; }
  double second_order() const { return energy_coupling.value + transverse.value + contact.value; }
  bool converged() const {
    return angular_momentum.converged && energy_coupling.converged && transverse.converged && contact.converged;
  }
};

/// <R| term |R> for each term, by adaptive quadrature of R(r)^2 * term(r)
/// on [0, inf). `energy` is the factor multiplying the theta^2/r^5 term.
PerturbationExpectation expect_perturbation(const RadialWavefunction& w, int l, int m_l, double energy,
                                            const PhysicalConstants& c,
                                            AngularMode mode = AngularMode::spherical_average_2_3,
                                            double rel_tol = 1e-11);

}  // namespace nckg
