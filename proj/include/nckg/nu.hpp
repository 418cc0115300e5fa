#pragma once

#include <vector>

#include "nckg/core.hpp"
#include "nckg/specfun.hpp"

namespace nckg {

/// R'' + (tau_tilde / sigma) R' + (sigma_tilde / sigma^2) R = 0 on [0, inf).
struct NUProblem {
  Polynomial sigma;        // degree <= 2, nonzero
  Polynomial tau_tilde;    // degree <= 1
  Polynomial sigma_tilde;  // degree <= 2

  void validate() const;
};

enum class BranchSign { plus, minus };

/// One choice of k and sign in
///   pi = (sigma' - tau_tilde)/2 +- sqrt(((sigma' - tau_tilde)/2)^2 - sigma_tilde + k sigma).
struct NUBranch {
  double k = 0.0;
  BranchSign sign = BranchSign::plus;
  Polynomial pi;
  Polynomial tau;        // tau_tilde + 2 pi
  double lambda = 0.0;   // k + pi'
  Polynomial radicand;   // the square-root argument at this k
  Polynomial root;       // degree <= 1 polynomial with root^2 == radicand
  /// Small-r exponent of phi, pi(0)/sigma'(0), when r = 0 is a regular
  /// singular point (sigma(0) = 0); otherwise 0 and regular_at_origin = true.
  double origin_exponent = 0.0;
  /// phi picks the larger indicial root at r = 0, i.e. R is the regular
  /// Frobenius solution there.
  bool regular_at_origin = true;
};

/// Every real k making the radicand a perfect square, each with both signs.
/// Throws NoPolynomialSolution if no real k exists.
std::vector<NUBranch> k_candidates(const NUProblem& p);

/// The unique branch with tau' < 0, a root of tau on [0, inf), and phi
/// regular at the origin. Throws NoAdmissibleBranch / AmbiguousBranch.
NUBranch select_branch(const std::vector<NUBranch>& branches);

/// lambda + n tau' + n(n-1)/2 sigma''.
double eigenvalue_residual(const NUBranch& b, int n, const Polynomial& sigma);

/// Unperturbed KG-Coulomb radial equation at trial energy E (units of m_e):
/// sigma = r, tau_tilde = 0, sigma_tilde = (E r + e^2)^2 - r^2 - l(l+1).
NUProblem kg_coulomb_problem(double energy, int l, double alpha);

/// lambda as printed for the selected KG-Coulomb branch:
///   2 [e^2 E - (1/2 + sqrt((l+1/2)^2 - e^4)) sqrt(1 - E^2)].
double kg_coulomb_lambda_printed(double energy, int l, double alpha);

struct NUEigenSolution {
  double energy = 0.0;       // units of m_e
  double residual = 0.0;     // eigenvalue_residual at the root
  int iterations = 0;
  NUBranch branch;
};

/// Root of eigenvalue_residual(E) on (0, 1) for radial degree n: bracket
/// seeded at `seed` +- 1e-3 (widened until the sign changes, upper end kept
/// below 1 - 1e-3 (1 - seed)), bisection, then secant polish. alpha = 0
/// returns the threshold E = 1 directly.
NUEigenSolution solve_kg_coulomb_energy(int n, int l, double alpha, double seed);

}  // namespace nckg
