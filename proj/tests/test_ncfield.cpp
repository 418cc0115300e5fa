#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "nckg/kgnc.hpp"
#include "nckg/ncfield.hpp"
#include "nckg/quadrature.hpp"

using namespace nckg;
using testing_support::kAlpha;
using testing_support::rel_diff;

namespace {
const PhysicalConstants kC = PhysicalConstants{}.with_alpha(kAlpha);

FieldPoint at(double r, double theta_ev2) {
  FieldPoint p;
  p.r = r;
  p.theta_ev2 = theta_ev2;
  return p;
}
}  // namespace

TEST_CASE("commutative limit of the scalar potential") {
  for (double r : {0.1, 1.0, 137.0}) CHECK(a0_deformed(at(r, 0.0), kC) == doctest::Approx(-std::sqrt(kAlpha) / r));
}

TEST_CASE("scalar-potential correction") {
  const double theta = kC.with_theta(1e-12).theta_natural();
  const double r = 0.5;
  const double expected = -std::sqrt(kAlpha) / r + std::pow(kAlpha, 2.5) * theta * theta * 2.0 / (20.0 * std::pow(r, 5));
  CHECK(rel_diff(a0_deformed(at(r, 1e-12), kC), expected) <= 1e-14);
  CHECK(kThetaContraction == 2.0);
}

TEST_CASE("vector potential") {
  auto p = at(std::sqrt(1.0 + 4.0 + 9.0), 1e-12);
  p.position = Vec3{1.0, 2.0, 3.0};
  const double theta = kC.with_theta(1e-12).theta_natural();
  const double pref = std::pow(kAlpha, 1.5) * theta / (4.0 * std::pow(p.r, 4));
  const auto a = ai_deformed(p, kC);
  CHECK(a[0] == doctest::Approx(pref * 2.0));
  CHECK(a[1] == doctest::Approx(-pref * 1.0));
  CHECK(a[2] == 0.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Vec3 x{u(rng), u(rng), u(rng)};
    auto q = at(std::hypot(x[0], x[1], x[2]), 1e-12);
    q.position = x;
    const auto v = ai_deformed(q, kC);
    const double dot = v[0] * x[0] + v[1] * x[1] + v[2] * x[2];
    CHECK(std::abs(dot) <= 1e-15 * q.r * std::hypot(v[0], v[1], v[2]));
  }
  CHECK_THROWS_AS(ai_deformed(at(1.0, 1e-12), kC), DomainError);
}

TEST_CASE("field-point validation") {
  CHECK_THROWS_AS(a0_deformed(at(0.0, 0.0), kC), DomainError);
  CHECK_THROWS_AS(a0_deformed(at(1.0, -1.0), kC), DomainError);
  auto p = at(2.0, 0.0);
  p.position = Vec3{1.0, 0.0, 0.0};
  CHECK_THROWS_AS(ai_deformed(p, kC), DomainError);
}

TEST_CASE("theta x squared") {
  CHECK(theta_x_squared(Vec3{1.0, 0.0, 0.0}, 2.0) == 4.0);
  CHECK(theta_x_squared(Vec3{0.0, 0.0, 5.0}, 2.0) == 0.0);
  CHECK(theta_x_squared(Vec3{1.0, 1.0, 0.0}, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("perturbation terms") {
  auto p = at(2.0, 1e-12);
  p.energy = 0.9;
  p.m_l = 2;
  const double theta = kC.with_theta(1e-12).theta_natural();
  const double e2 = kAlpha;
  const auto t = perturbation_terms(p, kC);
  CHECK(rel_diff(t.angular_momentum, -(e2 * e2 / (2.0 * 16.0)) * theta * 2.0) <= 1e-14);
  CHECK(rel_diff(t.energy_coupling, -(e2 * e2 * e2 / (5.0 * 32.0)) * 0.9 * theta * theta) <= 1e-14);
  CHECK(rel_diff(t.transverse, -(std::pow(e2, 4) / (16.0 * 256.0)) * theta * theta * 4.0 * (2.0 / 3.0)) <= 1e-14);
  CHECK(rel_diff(t.contact, -(std::pow(e2, 4) / (5.0 * 64.0)) * theta * theta) <= 1e-14);
  CHECK(t.sum() == doctest::Approx(t.angular_momentum + t.energy_coupling + t.transverse + t.contact));
  const auto z = perturbation_terms(at(2.0, 0.0), kC);
  CHECK(z.sum() == 0.0);
}

TEST_CASE("expectation values reproduce the closed-form shifts") {
  const auto c = kC.with_theta(1e-20);
  const QuantumNumbers q(1, 3, -2);
  const auto w = radial_wavefunction(q, c);
  const auto ex = expect_perturbation(w, 3, -2, unperturbed_energy(q, c), c);
  CHECK(ex.converged());
  const auto b = energy_shift_nc(q, c);
  CHECK(rel_diff(ex.first_order(), b.shift_theta1) <= 1e-9);
  CHECK(rel_diff(ex.energy_coupling.value, b.shift_theta2_f5) <= 1e-9);
  CHECK(rel_diff(ex.transverse.value + ex.contact.value, b.shift_theta2_f6) <= 1e-9);
  // Exact angular mode goes through the same matrix element.
  const auto ex2 = expect_perturbation(w, 3, -2, unperturbed_energy(q, c), c, AngularMode::exact_lm);
  const auto b2 = energy_shift_nc(q, c, AngularMode::exact_lm);
  CHECK(rel_diff(ex2.transverse.value + ex2.contact.value, b2.shift_theta2_f6) <= 1e-9);
}

TEST_CASE("divergent expectation values are reported") {
  const auto c = kC.with_theta(1e-20);
  const QuantumNumbers q(0, 0, 0);
  CHECK_THROWS_AS(expect_perturbation(radial_wavefunction(q, c), 0, 0, unperturbed_energy(q, c), c), DivergentIntegral);
}
