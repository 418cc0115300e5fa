#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "nckg/bounds.hpp"
#include "nckg/nrlimit.hpp"

using namespace nckg;
using testing_support::rel_diff;

namespace {
BoundRequest lamb(BoundOrder order = BoundOrder::first) {
  BoundRequest r;
  r.accuracy_ev = hz_to_ev(kLambShiftAccuracyHz, PhysicalConstants{});
  r.order = order;
  return r;
}
}  // namespace

TEST_CASE("string round trips") {
  CHECK(model_from_string(to_string(Model::relativistic)) == Model::relativistic);
  CHECK(model_from_string("nr") == Model::nonrelativistic);
  CHECK(bound_order_from_string(to_string(BoundOrder::both)) == BoundOrder::both);
  CHECK_THROWS_AS(model_from_string("dirac"), DomainError);
  CHECK_THROWS_AS(bound_order_from_string("third"), DomainError);
}

TEST_CASE("first-order 2p bound") {
  const PhysicalConstants c;
  const auto b = theta_bound(lamb(), c);
  // |Delta E| = (alpha^2/2) <r^-4> theta m_e, <r^-4> = alpha^4/24 (units of m_e^4).
  const double f4 = std::pow(c.alpha, 4) / 24.0;
  const double expected_ev2 = lamb().accuracy_ev / ((c.alpha * c.alpha / 2.0) * f4 * c.m_e_ev * c.m_e_ev * c.m_e_ev);
  CHECK(rel_diff(b.theta_max_ev2, expected_ev2) <= 1e-12);
  CHECK(b.theta_max_gev2 == doctest::Approx(b.theta_max_ev2 * 1e18).epsilon(1e-15));
  CHECK(b.lambda_gev == doctest::Approx(1.0 / std::sqrt(b.theta_max_gev2)).epsilon(1e-15));
  CHECK(b.ratio_to_paper == doctest::Approx(b.theta_max_gev2 / 2.5e-7).epsilon(1e-15));
  CHECK(b.dominant_term == "shift_theta1");
  CHECK(b.roundtrip_rel_error <= 1e-10);
  CHECK(std::abs(b.shift_at_bound.shift()) == doctest::Approx(lamb().accuracy_ev).epsilon(1e-10));
}

TEST_CASE("bound errors") {
  const PhysicalConstants c;
  auto r = lamb();
  r.m_l = 0;
  CHECK_THROWS_AS(theta_bound(r, c), NoFirstOrderSensitivity);
  r = lamb(BoundOrder::second);
  CHECK_THROWS_AS(theta_bound(r, c), DivergentMoment);  // 2p has no <r^-5>
  r = lamb();
  r.accuracy_ev = 0.0;
  CHECK_THROWS_AS(theta_bound(r, c), DomainError);
}

TEST_CASE("bound scales with accuracy") {
  const PhysicalConstants c;
  auto r = lamb();
  const double t1 = theta_bound(r, c).theta_max_ev2;
  r.accuracy_ev *= 10.0;
  CHECK(theta_bound(r, c).theta_max_ev2 == doctest::Approx(10.0 * t1).epsilon(1e-13));
  BoundRequest s{Model::nonrelativistic, 3, 2, 0, 1e-9, BoundOrder::second, AngularMode::spherical_average_2_3};
  const double t2 = theta_bound(s, c).theta_max_ev2;
  s.accuracy_ev *= 4.0;
  CHECK(theta_bound(s, c).theta_max_ev2 == doctest::Approx(2.0 * t2).epsilon(1e-13));
}

TEST_CASE("both orders") {
  const PhysicalConstants c;
  BoundRequest r{Model::relativistic, 0, 2, 1, 1e-12, BoundOrder::both, AngularMode::spherical_average_2_3};
  const auto b = theta_bound(r, c);
  CHECK(b.roundtrip_rel_error <= 1e-10);
  r.order = BoundOrder::first;
  CHECK(rel_diff(theta_bound(r, c).theta_max_ev2, b.theta_max_ev2) <= 1e-6);
  const auto shift = shift_for_request(r, c, b.theta_max_ev2);
  CHECK(shift.shift_theta1 == doctest::Approx(b.shift_at_bound.shift_theta1).epsilon(1e-12));
}
