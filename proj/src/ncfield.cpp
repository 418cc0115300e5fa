#include "nckg/ncfield.hpp"

#include <cmath>

#include "nckg/quadrature.hpp"

namespace nckg {

void FieldPoint::validate() const {
  if (!(r > 0.0)) throw DomainError("field point requires r > 0");
  if (!(theta_ev2 >= 0.0)) throw DomainError("theta must be non-negative");
  if (position) {
    const auto& x = *position;
    const double norm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    if (std::abs(norm - r) > 1e-12 * std::max(1.0, r)) throw DomainError("|position| must equal r");
  }
}

double a0_deformed(const FieldPoint& p, const PhysicalConstants& c) {
  p.validate();
  const double e = std::sqrt(c.alpha);
  const double theta = c.with_theta(p.theta_ev2).theta_natural();
  const double e5 = c.alpha * c.alpha * e;
  return -e / p.r + e5 * theta * theta * kThetaContraction / (20.0 * std::pow(p.r, 5));
}

Vec3 ai_deformed(const FieldPoint& p, const PhysicalConstants& c) {
  p.validate();
  if (!p.position) throw DomainError("a_i needs a position vector");
  const auto& x = *p.position;
  const double e3 = c.alpha * std::sqrt(c.alpha);
  const double theta = c.with_theta(p.theta_ev2).theta_natural();
  const double pref = e3 * theta / (4.0 * std::pow(p.r, 4));
  // theta^{12} = theta, theta^{21} = -theta, every other component zero.
  return {pref * x[1], -pref * x[0], 0.0};
}

double theta_x_squared(const Vec3& x, double theta) {
  const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  return theta * theta * ((r2 - x[2] * x[2]) - 2.0 * x[0] * x[1]);
}

PerturbationTerms perturbation_terms(const FieldPoint& p, const PhysicalConstants& c, AngularMode mode) {
  p.validate();
  const double theta = c.with_theta(p.theta_ev2).theta_natural();
  const double e4 = c.alpha * c.alpha;
  const double e6 = e4 * c.alpha;
  const double e8 = e4 * e4;
  const double r = p.r;
  const double r4 = r * r * r * r;
  PerturbationTerms t;
  t.angular_momentum = -(e4 / (2.0 * r4)) * theta * p.m_l;
  t.energy_coupling = -(e6 / (5.0 * r4 * r)) * p.energy * theta * theta;
  const double theta_x2 = theta * theta * r * r * transverse_angular_factor(p.l, p.m_l, mode);
  t.transverse = -(e8 / (16.0 * r4 * r4)) * theta_x2;
  t.contact = -(e8 / (5.0 * r4 * r * r)) * theta * theta;
  return t;
}

PerturbationExpectation expect_perturbation(const RadialWavefunction& w, int l, int m_l, double energy,
                                            const PhysicalConstants& c, AngularMode mode, double rel_tol) {
  HalflineOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = rel_tol;
  opts.scale = 1.0 / (2.0 * w.a);
  auto term_integral = [&](auto pick) {
    return integrate_halfline(
        [&](double r) {
          if (r <= 0.0) return 0.0;
          FieldPoint p;
          p.r = r;
          p.theta_ev2 = c.theta_ev2;
          p.energy = energy;
          p.l = l;
          p.m_l = m_l;
          const double psi = w(r);
          return psi * psi * pick(perturbation_terms(p, c, mode));
        },
        opts);
  };
  PerturbationExpectation out;
  out.angular_momentum = m_l == 0 ? IntegralResult{0.0, 0.0, true}
                                  : term_integral([](const PerturbationTerms& t) { return t.angular_momentum; });
  out.energy_coupling = term_integral([](const PerturbationTerms& t) { return t.energy_coupling; });
  out.transverse = term_integral([](const PerturbationTerms& t) { return t.transverse; });
  out.contact = term_integral([](const PerturbationTerms& t) { return t.contact; });
  return out;
}

}  // namespace nckg
