#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "nckg/kgnc.hpp"
#include "nckg/nrlimit.hpp"
#include "nckg/quadrature.hpp"
#include "nckg/specfun.hpp"

using namespace nckg;
using testing_support::rel_diff;

TEST_CASE("two-point rule is the textbook one") {
  // Nodes 2 -+ sqrt(2), weights (2 +- sqrt(2))/4.
  const auto r = gauss_laguerre_rule(2, 0.0);
  CHECK(r.nodes[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r.nodes[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r.weights[0] == doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-15));
  CHECK(r.weights[1] == doctest::Approx((2.0 - std::sqrt(2.0)) / 4.0).epsilon(1e-15));
}

TEST_CASE("rules are exact on monomials up to degree 2N-1") {
  for (double a : {-0.5, 0.0, 1.0, 2.0 * nu_exponent(2, testing_support::kAlpha) + 1.0})
    for (int order : {1, 3, 10, 25, 60}) {
      const auto rule = gauss_laguerre_rule(order, a);
      REQUIRE(rule.nodes.size() == static_cast<std::size_t>(order));
      for (int i = 1; i < order; ++i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
      for (int j = 0; j <= 2 * order - 1; ++j) {
        double sum = 0.0;
        const double log_exact = nckg::lgamma(a + j + 1.0);
        for (int i = 0; i < order; ++i)
          sum += std::exp(std::log(rule.weights[i]) + j * std::log(rule.nodes[i]) - log_exact);
        CHECK(std::abs(sum - 1.0) <= 1e-12);
      }
    }
}

TEST_CASE("nodes are zeros of the Laguerre polynomial") {
  const auto rule = gauss_laguerre_rule(12, 0.8);
  for (double x : rule.nodes) {
    const double scale = std::abs(laguerre(11, 0.8, x)) * 12.0 + 1.0;
    CHECK(std::abs(laguerre(12, 0.8, x)) <= 1e-11 * scale);
  }
}

TEST_CASE("rule construction rejects bad input") {
  CHECK_THROWS_AS(gauss_laguerre_rule(0, 0.0), DomainError);
  CHECK_THROWS_AS(gauss_laguerre_rule(201, 0.0), DomainError);
  CHECK_THROWS_AS(gauss_laguerre_rule(5, -1.0), DomainError);
  CHECK_NOTHROW(gauss_laguerre_rule(200, 0.0));
}

TEST_CASE("adaptive half-line integration") {
  auto r = integrate_halfline([](double x) { return std::exp(-x); }, 1e-13);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 1.0) <= 1e-12);
  r = integrate_halfline([](double x) { return 1.0 / (1.0 + x * x); }, 1e-10);
  CHECK(std::abs(r.value - M_PI / 2.0) <= 1e-9);
  // Integrable singularity x^-1/2 e^-x: Gamma(1/2).
  r = integrate_halfline([](double x) { return std::exp(-x) / std::sqrt(x); }, HalflineOptions{0.0, 1e-10, 1.0, 4000});
  CHECK(rel_diff(r.value, std::sqrt(M_PI)) <= 1e-8);
  // Scale matters only for efficiency.
  r = integrate_halfline([](double x) { return std::exp(-x / 500.0); }, HalflineOptions{0.0, 1e-12, 500.0, 4000});
  CHECK(rel_diff(r.value, 500.0) <= 1e-11);
}

TEST_CASE("non-integrable origins are rejected") {
  CHECK_THROWS_AS(integrate_halfline([](double x) { return std::exp(-x) / x; }, 1e-10), DivergentIntegral);
  CHECK_THROWS_AS(integrate_halfline([](double x) { return std::exp(-x) / (x * x); }, 1e-10), DivergentIntegral);
  CHECK_THROWS_AS(integrate_halfline([](double x) { return std::exp(-x) * std::pow(x, -1.0001); }, 1e-10),
                  DivergentIntegral);
}

TEST_CASE("radial moment oracle") {
  const PhysicalConstants c;
  // Hydrogen 2p: <r^-4> = 1/(24 a_B^4), <r^-1> = 1/(4 a_B).
  const auto w = hydrogen_wavefunction(HydrogenState(2, 1, 0), c);
  const double ab = bohr_radius(c);
  CHECK(rel_diff(radial_moment_oracle(w, 4).value * std::pow(ab, 4), 1.0 / 24.0) <= 1e-13);
  CHECK(rel_diff(radial_moment_oracle(w, 1).value * ab, 0.25) <= 1e-13);
  CHECK(rel_diff(radial_moment_oracle(w, 0).value, 1.0) <= 1e-13);
  CHECK(radial_moment_oracle(w, 4).converged);
  CHECK_THROWS_AS(radial_moment_oracle(w, 5), DivergentMoment);
  const auto s = hydrogen_wavefunction(HydrogenState(1, 0, 0), c);
  CHECK_THROWS_AS(radial_moment_oracle(s, 3), DivergentMoment);
  CHECK_NOTHROW(radial_moment_oracle(s, 2));
}
