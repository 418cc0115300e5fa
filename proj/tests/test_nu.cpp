#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "nckg/kgnc.hpp"
#include "nckg/nu.hpp"

using namespace nckg;
using testing_support::kAlpha;
using testing_support::rel_diff;

TEST_CASE("problem validation") {
  NUProblem p{Polynomial{}, Polynomial{}, Polynomial{1.0}};
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = NUProblem{Polynomial{0.0, 1.0}, Polynomial{0.0, 0.0, 1.0}, Polynomial{}};
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = NUProblem{Polynomial{0.0, 0.0, 0.0, 1.0}, Polynomial{}, Polynomial{}};
  CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("hydrogen-like problem: candidates are perfect squares") {
  for (int l : {0, 1, 3})
    for (double e : {0.3, 0.99, 0.99999}) {
      const auto branches = k_candidates(kg_coulomb_problem(e, l, kAlpha));
      CHECK(branches.size() == 4);
      for (const auto& b : branches) {
        const auto diff = b.radicand - b.root * b.root;
        double scale = 0.0;
        for (double v : b.radicand.coeffs()) scale = std::max(scale, std::abs(v));
        for (double v : diff.coeffs()) CHECK(std::abs(v) <= 1e-12 * scale);
        CHECK(b.lambda == doctest::Approx(b.k + b.pi.derivative()(0.0)));
      }
    }
}

TEST_CASE("exactly one admissible branch, with the printed lambda") {
  for (int l = 0; l <= 5; ++l)
    for (double e : {0.2, 0.9, 0.99997}) {
      const auto sel = select_branch(k_candidates(kg_coulomb_problem(e, l, kAlpha)));
      CHECK(sel.tau.coeff(1) < 0.0);
      CHECK(sel.regular_at_origin);
      const double gamma = std::sqrt((l + 0.5) * (l + 0.5) - kAlpha * kAlpha);
      CHECK(sel.origin_exponent == doctest::Approx(0.5 + gamma).epsilon(1e-12));
      CHECK(rel_diff(sel.lambda, kg_coulomb_lambda_printed(e, l, kAlpha)) <= 1e-11);
    }
}

TEST_CASE("no admissible branch when tau cannot fall") {
  // sigma = 1, sigma_tilde = +1: radicand 1/4 - ... gives k but tau' >= 0 only.
  NUProblem p{Polynomial{1.0}, Polynomial{}, Polynomial{0.0, 0.0, 1.0}};
  CHECK_THROWS(select_branch(k_candidates(p)));
}

TEST_CASE("root finding reproduces the closed-form energy") {
  for (double alpha : {kAlpha, 0.2})
    for (int n = 0; n <= 8; n += 2)
      for (int l = 0; l <= 5; ++l) {
        const auto c = PhysicalConstants{}.with_alpha(alpha);
        const double closed = unperturbed_energy(QuantumNumbers(n, l, 0), c);
        const auto sol = solve_kg_coulomb_energy(n, l, alpha, closed);
        CHECK(rel_diff(sol.energy, closed) <= 1e-10);
        CHECK(std::abs(sol.residual) <= 1e-8);
      }
}

TEST_CASE("root finding from a displaced seed") {
  const auto c = PhysicalConstants{}.with_alpha(0.2);
  const double closed = unperturbed_energy(QuantumNumbers(1, 0, 0), c);
  const auto sol = solve_kg_coulomb_energy(1, 0, 0.2, closed - 0.01);
  CHECK(rel_diff(sol.energy, closed) <= 1e-10);
}

TEST_CASE("free limit") {
  CHECK(solve_kg_coulomb_energy(0, 0, 0.0, 1.0).energy == 1.0);
  CHECK_THROWS_AS(solve_kg_coulomb_energy(-1, 0, kAlpha, 0.9), DomainError);
}

TEST_CASE("eigenvalue residual formula") {
  NUBranch b;
  b.lambda = 3.0;
  b.tau = Polynomial{1.0, -2.0};
  CHECK(eigenvalue_residual(b, 2, Polynomial{0.0, 0.0, 1.0}) == 3.0 - 4.0 + 2.0);
}
