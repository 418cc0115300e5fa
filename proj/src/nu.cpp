#include "nckg/nu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace nckg {

void NUProblem::validate() const {
  if (sigma.is_zero()) throw DomainError("sigma must not vanish identically");
  if (sigma.degree() > 2) throw DomainError("sigma must have degree <= 2");
  if (tau_tilde.degree() > 1) throw DomainError("tau_tilde must have degree <= 1");
  if (sigma_tilde.degree() > 2) throw DomainError("sigma_tilde must have degree <= 2");
}

namespace {

// Real roots of c2 k^2 + c1 k + c0 = 0, deduplicated.
std::vector<double> real_roots(double c2, double c1, double c0) {
  const double scale = std::max({std::abs(c2), std::abs(c1), std::abs(c0), 1e-300});
  const double tiny = 1e-14 * scale;
  if (std::abs(c2) <= tiny) {
    if (std::abs(c1) <= tiny) {
      if (std::abs(c0) <= tiny) return {0.0};  // every k works; k = 0 is one of them
      return {};
    }
    return {-c0 / c1};
  }
  double disc = c1 * c1 - 4.0 * c2 * c0;
  const double disc_tol = 1e-12 * std::max(c1 * c1, std::abs(4.0 * c2 * c0));
  if (disc < -disc_tol) return {};
  if (disc <= disc_tol) return {-c1 / (2.0 * c2)};
  const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
  double r1 = q / c2;
  double r2 = (q != 0.0) ? c0 / q : -r1;
  if (r1 > r2) std::swap(r1, r2);
  return {r2, r1};
}

}  // namespace

std::vector<NUBranch> k_candidates(const NUProblem& p) {
  p.validate();
  const Polynomial half = 0.5 * (p.sigma.derivative() - p.tau_tilde);
  const Polynomial base = half * half - p.sigma_tilde;  // radicand at k = 0
  // radicand(k) = base + k sigma; coefficient i is A_i + k B_i.
  const double a0 = base.coeff(0), a1 = base.coeff(1), a2 = base.coeff(2);
  const double b0 = p.sigma.coeff(0), b1 = p.sigma.coeff(1), b2 = p.sigma.coeff(2);
  // Perfect square <=> discriminant q1^2 - 4 q0 q2 = 0, a quadratic in k.
  const double c2 = b1 * b1 - 4.0 * b0 * b2;
  const double c1 = 2.0 * a1 * b1 - 4.0 * (a0 * b2 + a2 * b0);
  const double c0 = a1 * a1 - 4.0 * a0 * a2;

  std::vector<NUBranch> out;
  for (double k : real_roots(c2, c1, c0)) {
    const Polynomial radicand = base + k * p.sigma;
    const double q0 = radicand.coeff(0), q1 = radicand.coeff(1), q2 = radicand.coeff(2);
    const double mag = std::max({std::abs(q0), std::abs(q1), std::abs(q2), 1e-300});
    double s1 = 0.0, s0 = 0.0;
    if (q2 > 1e-14 * mag) {
      s1 = std::sqrt(q2);
      s0 = q1 / (2.0 * s1);
    } else if (q2 >= -1e-14 * mag && q0 >= 0.0) {
      s0 = std::sqrt(q0);
    } else {
      continue;  // complex square root, no real branch
    }
    const Polynomial root{s0, s1};
    for (BranchSign sign : {BranchSign::plus, BranchSign::minus}) {
      NUBranch b;
      b.k = k;
      b.sign = sign;
      b.radicand = radicand;
      b.root = root;
      b.pi = (sign == BranchSign::plus) ? half + root : half - root;
      b.tau = p.tau_tilde + 2.0 * b.pi;
      b.lambda = k + b.pi.derivative().coeff(0);
      const double sigma_prime0 = p.sigma.derivative()(0.0);
      if (p.sigma(0.0) == 0.0 && sigma_prime0 != 0.0) {
        // Indicial equation at r = 0: s(s-1) + (tau_tilde(0)/sigma'(0)) s + sigma_tilde(0)/sigma'(0)^2 = 0.
        const double bcoef = p.tau_tilde(0.0) / sigma_prime0 - 1.0;
        const double ccoef = p.sigma_tilde(0.0) / (sigma_prime0 * sigma_prime0);
        const double disc = bcoef * bcoef - 4.0 * ccoef;
        b.origin_exponent = b.pi(0.0) / sigma_prime0;
        if (disc >= 0.0) {
          const double s_max = 0.5 * (-bcoef + std::sqrt(disc));
          b.regular_at_origin = std::abs(b.origin_exponent - s_max) <= 1e-8 * std::max(1.0, std::abs(s_max));
        }
      }
      out.push_back(std::move(b));
    }
  }
  if (out.empty()) throw NoPolynomialSolution("no real k makes the radicand a perfect square");
  return out;
}

NUBranch select_branch(const std::vector<NUBranch>& branches) {
  std::vector<const NUBranch*> admissible;
  for (const auto& b : branches) {
    const double slope = b.tau.coeff(1);
    if (!(slope < 0.0) || b.tau.degree() != 1) continue;
    const double tau_root = -b.tau.coeff(0) / slope;
    if (tau_root < 0.0) continue;
    if (!b.regular_at_origin) continue;
    admissible.push_back(&b);
  }
  if (admissible.empty())
    throw NoAdmissibleBranch("no branch has tau' < 0 with a root on [0, inf) and a regular phi");
  if (admissible.size() > 1)
    throw AmbiguousBranch(std::to_string(admissible.size()) + " branches satisfy the selection rule");
  return *admissible.front();
}

double eigenvalue_residual(const NUBranch& b, int n, const Polynomial& sigma) {
  const double tau_prime = b.tau.coeff(1);
  const double sigma_second = 2.0 * sigma.coeff(2);
  return b.lambda + n * tau_prime + 0.5 * n * (n - 1.0) * sigma_second;
}

NUProblem kg_coulomb_problem(double energy, int l, double alpha) {
  const double e2 = alpha;  // alpha = e^2
  NUProblem p;
  p.sigma = Polynomial{0.0, 1.0};
  p.tau_tilde = Polynomial{};
  // (E r + e^2)^2 - r^2 m^2 - l(l+1), with 1 - E^2 formed as (1-E)(1+E).
  p.sigma_tilde = Polynomial{e2 * e2 - l * (l + 1.0), 2.0 * energy * e2, -(1.0 - energy) * (1.0 + energy)};
  return p;
}

double kg_coulomb_lambda_printed(double energy, int l, double alpha) {
  const double gamma = std::sqrt((l + 0.5) * (l + 0.5) - alpha * alpha);
  return 2.0 * (alpha * energy - (0.5 + gamma) * std::sqrt((1.0 - energy) * (1.0 + energy)));
}

NUEigenSolution solve_kg_coulomb_energy(int n, int l, double alpha, double seed) {
  if (n < 0) throw DomainError("radial quantum number must be >= 0");
  const Polynomial sigma{0.0, 1.0};
  if (alpha == 0.0) {
    // No binding: every level sits at the threshold E = m_e, where tau' = 0
    // and no branch is admissible, so there is nothing to bracket.
    NUEigenSolution sol;
    sol.energy = 1.0;
    return sol;
  }
  auto residual = [&](double e) {
    return eigenvalue_residual(select_branch(k_candidates(kg_coulomb_problem(e, l, alpha))), n, sigma);
  };
  // Near threshold tau' = -2 sqrt(1 - E^2) underflows, so the upper end
  // stays a fixed fraction of the seed's binding energy away from 1.
  const double top = seed < 1.0 ? 1.0 - 1e-3 * (1.0 - seed) : 1.0 - 1e-15;
  double width = 1e-3;
  double lo = 0.0, hi = 0.0, f_lo = 0.0, f_hi = 0.0;
  bool bracketed = false;
  for (int attempt = 0; attempt < 12 && !bracketed; ++attempt, width *= 4.0) {
    lo = std::max(seed - width, 1e-12);
    hi = std::min(seed + width, top);
    f_lo = residual(lo);
    f_hi = residual(hi);
    bracketed = (f_lo <= 0.0) != (f_hi <= 0.0);
  }
  if (!bracketed) throw DomainError("could not bracket a KG-Coulomb eigenvalue");

  NUEigenSolution sol;
  for (int i = 0; i < 40; ++i, ++sol.iterations) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = residual(mid);
    if ((f_mid <= 0.0) == (f_lo <= 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  // Secant polish from the bracket ends, kept inside the bracket.
  double x0 = lo, x1 = hi, f0 = f_lo, f1 = f_hi;
  for (int i = 0; i < 30 && f1 != f0; ++i, ++sol.iterations) {
    double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!(x2 >= lo && x2 <= hi)) x2 = 0.5 * (lo + hi);
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = residual(x1);
    if (f1 == 0.0 || std::abs(x1 - x0) <= 2.0 * std::numeric_limits<double>::epsilon() * x1) break;
  }
  sol.energy = x1;
  sol.branch = select_branch(k_candidates(kg_coulomb_problem(x1, l, alpha)));
  sol.residual = eigenvalue_residual(sol.branch, n, sigma);
  return sol;
}

}  // namespace nckg
