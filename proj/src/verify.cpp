#include "nckg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <tuple>

#include "nckg/bounds.hpp"
#include "nckg/kgnc.hpp"
#include "nckg/ncfield.hpp"
#include "nckg/nrlimit.hpp"
#include "nckg/nu.hpp"
#include "nckg/output.hpp"
#include "nckg/quadrature.hpp"
#include "nckg/specfun.hpp"
#include "nckg/sweep.hpp"

namespace nckg::verify {

namespace {

constexpr double kAlphaPhysical = 1.0 / 137.035999;

PhysicalConstants physical() { return PhysicalConstants{}.with_alpha(kAlphaPhysical); }

double rel(double a, double b) {
  const double d = std::abs(a - b);
  return b == 0.0 ? d : d / std::abs(b);
}

std::string fmt(double v) { return output::format_double(v); }

// Tracks the worst discrepancy and the place it occurred.
struct Worst {
  double value = 0.0;
  std::string where;
  void update(double v, const std::string& at) {
    if (!(v <= value)) {  // NaN counts as worst
      value = std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
      where = at;
    }
  }
};

std::string state_label(const char* model, int n, int l, int m = 0, int k = -1) {
  std::ostringstream os;
  os << model << "(n=" << n << ",l=" << l;
  if (m) os << ",m=" << m;
  if (k >= 0) os << ",k=" << k;
  os << ")";
  return os.str();
}

void finish(CheckResult& r, const Worst& w, bool extra_ok = true) {
  r.measured = w.value;
  r.passed = extra_ok && w.value <= r.tolerance;
  if (!w.where.empty()) r.notes.push_back("worst at " + w.where + ": " + fmt(w.value));
}

// ---------------------------------------------------------------- A1..A9

void energy_identity(CheckResult& r) {
  Worst w;
  for (double alpha : {kAlphaPhysical, 0.2}) {
    const auto c = PhysicalConstants{}.with_alpha(alpha);
    for (int n = 0; n <= 8; ++n)
      for (int l = 0; l <= 5; ++l) {
        const QuantumNumbers q(n, l, 0);
        w.update(rel(unperturbed_energy(q, c), unperturbed_energy_sommerfeld(q, c)),
                 state_label("rel", n, l) + " alpha=" + fmt(alpha));
      }
  }
  finish(r, w);
}

void nu_crosscheck(CheckResult& r) {
  Worst w;
  for (double alpha : {kAlphaPhysical, 0.2}) {
    const auto c = PhysicalConstants{}.with_alpha(alpha);
    std::vector<StateSpec> grid;
    for (int n = 0; n <= 8; ++n)
      for (int l = 0; l <= 5; ++l) grid.push_back({Model::relativistic, n, l, 0});
    const auto roots = nu_energy_sweep(grid, alpha);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const QuantumNumbers q(grid[i].n, grid[i].l, 0);
      w.update(rel(roots[i], unperturbed_energy(q, c)), state_label("rel", q.n(), q.l()) + " alpha=" + fmt(alpha));
    }
  }
  finish(r, w);
}

double normalization_error(const RadialWavefunction& w, bool& converged) {
  HalflineOptions opts;
  opts.abs_tol = 1e-12;
  opts.scale = 1.0 / (2.0 * w.a);
  const auto res = integrate_halfline(
      [&](double r) {
        const double v = w(r);
        return v * v;
      },
      opts);
  converged = converged && res.converged;
  return std::abs(res.value - 1.0);
}

void normalization(CheckResult& r) {
  Worst w;
  bool converged = true;
  const auto c = physical();
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l)
      w.update(normalization_error(radial_wavefunction(QuantumNumbers(n, l, 0), c), converged),
               state_label("rel", n, l));
  for (int np = 1; np <= 5; ++np)
    for (int l = 0; l < np; ++l)
      w.update(normalization_error(hydrogen_wavefunction(HydrogenState(np, l, 0), c), converged),
               state_label("nr", np, l));
  if (!converged) r.notes.push_back("an adaptive integral did not converge");
  finish(r, w, converged);
}

bool moment_diverges_everywhere(const std::function<void()>& closed, const std::function<void()>& oracle) {
  bool closed_threw = false, oracle_threw = false;
  try {
    closed();
  } catch (const DivergentMoment&) {
    closed_threw = true;
  }
  try {
    oracle();
  } catch (const DivergentMoment&) {
    oracle_threw = true;
  }
  return closed_threw && oracle_threw;
}

void moment_oracle(CheckResult& r) {
  Worst w;
  int convergent = 0, divergent = 0, leaks = 0;
  const auto c = physical();
  for (int n = 0; n <= 4; ++n)
    for (int l = 0; l <= 4; ++l)
      for (int k = 4; k <= 6; ++k) {
        const QuantumNumbers q(n, l, 0);
        const auto wf = radial_wavefunction(q, c);
        if (k < 2.0 * wf.effective_exponent + 3.0) {
          const auto m = moment_closed(q, c, k);
          w.update(m.rel_discrepancy, state_label("rel", n, l, 0, k));
          ++convergent;
        } else {
          ++divergent;
          if (!moment_diverges_everywhere([&] { moment_closed(q, c, k); },
                                          [&] { radial_moment_oracle(wf, k); }))
            ++leaks;
        }
      }
  for (int np = 1; np <= 5; ++np)
    for (int l = 0; l < np && l <= 4; ++l)
      for (int k = 4; k <= 6; ++k) {
        const HydrogenState s(np, l, 0);
        if (l >= (k == 4 ? 1 : 2)) {
          const auto m = hydrogen_moment_closed(s, c, k);
          w.update(m.rel_discrepancy, state_label("nr", np, l, 0, k));
          ++convergent;
        } else {
          ++divergent;
          const auto wf = hydrogen_wavefunction(s, c);
          if (!moment_diverges_everywhere([&] { hydrogen_moment_closed(s, c, k); },
                                          [&] { radial_moment_oracle(wf, k); }))
            ++leaks;
        }
      }
  // <r^-4> of hydrogen 2p is 1/(24 a_B^4): closed form, quadrature and printed formula.
  const auto m = hydrogen_moment_closed(HydrogenState(2, 1, 0), c, 4);
  const double expected = 1.0 / (24.0 * std::pow(bohr_radius(c), 4));
  w.update(rel(m.closed_form, expected), "nr 2p closed vs 1/(24 a_B^4)");
  w.update(rel(m.oracle.value, expected), "nr 2p oracle vs 1/(24 a_B^4)");
  w.update(rel(*m.paper_fidelity, expected), "nr 2p printed vs 1/(24 a_B^4)");
  r.notes.push_back(std::to_string(convergent) + " convergent moments compared, " + std::to_string(divergent) +
                    " divergent moments rejected");
  if (leaks) r.notes.push_back(std::to_string(leaks) + " divergent moments produced a number");
  finish(r, w, leaks == 0);
}

void printed_formula_audit(CheckResult& r) {
  Worst w;
  const auto c = physical();
  int printed_mismatch = 0;
  auto audit = [&](const MomentComparison& m, const std::string& label) {
    w.update(m.rel_discrepancy, label);
    if (m.paper_discrepancy && *m.paper_discrepancy > 1e-8) {
      ++printed_mismatch;
      r.notes.push_back("warning: printed formula " + label + " differs from quadrature by " +
                        fmt(*m.paper_discrepancy) + " (relative)");
    }
  };
  for (int n = 0; n <= 3; ++n)
    for (int l = 2; l <= 4; ++l)
      for (int k = 4; k <= 6; ++k) audit(moment_closed(QuantumNumbers(n, l, 0), c, k), state_label("rel", n, l, 0, k));
  for (int np = 3; np <= 5; ++np)
    for (int l = 2; l < np; ++l)
      for (int k = 4; k <= 6; ++k)
        audit(hydrogen_moment_closed(HydrogenState(np, l, 0), c, k), state_label("nr", np, l, 0, k));
  r.notes.insert(r.notes.begin(), std::to_string(printed_mismatch) + " printed-formula discrepancies logged");
  finish(r, w);
}

void shift_reconstruction(CheckResult& r) {
  Worst w;
  bool converged = true;
  const auto c = physical().with_theta(1e-20);
  const double theta = c.theta_natural();
  const double a4 = std::pow(c.alpha, 4);
  for (int n = 0; n <= 2; ++n)
    for (int l = 2; l <= 3; ++l)
      for (int m = -l; m <= l; ++m) {
        const QuantumNumbers q(n, l, m);
        const auto wf = radial_wavefunction(q, c);
        const double e0 = unperturbed_energy(q, c);
        const auto ex = expect_perturbation(wf, l, m, e0, c);
        converged = converged && ex.converged();
        const auto b = energy_shift_nc(q, c);
        const auto label = state_label("rel", n, l, m);
        if (m != 0) w.update(rel(ex.first_order(), b.shift_theta1), label + " first order");
        w.update(rel(ex.second_order(), b.shift_theta2_f5 + b.shift_theta2_f6), label + " second order");
        w.update(rel(ex.energy_coupling.value, b.shift_theta2_f5), label + " f5 term");
        w.update(rel(ex.transverse.value + ex.contact.value, b.shift_theta2_f6), label + " f6 terms");
        // 29/120 = 1/24 + 1/5: the transverse (2/3 * 1/16) and contact pieces.
        const double f6 = moment_closed(q, c, 6).closed_form;
        const double rebuilt = -(1.0 / 24.0 + 1.0 / 5.0) * a4 * f6 * theta * theta;
        w.update(rel(rebuilt, b.shift_theta2_f6), label + " 29/120 identity");
      }
  if (!converged) r.notes.push_back("a perturbation integral did not converge");
  finish(r, w, converged);
}

void nonrel_limit(CheckResult& r) {
  Worst w;
  bool ok = true;
  const auto c = physical();
  const double bound = 2.0 * c.alpha * c.alpha;
  double worst_ratio = 0.0;
  for (int np = 1; np <= 4; ++np)
    for (int l = 0; l < np; ++l) {
      const double dev = nonrel_consistency(np - l - 1, l, c);
      worst_ratio = std::max(worst_ratio, dev / bound);
      if (dev > bound) ok = false;
      const double dev_small = nonrel_consistency(np - l - 1, l, c.with_alpha(1e-4));
      w.update(dev_small, state_label("nr", np, l) + " alpha=1e-4");
    }
  r.notes.push_back("max deviation / (2 alpha^2) at physical alpha: " + fmt(worst_ratio));
  finish(r, w, ok);
}

void splitting(CheckResult& r) {
  Worst w;
  bool exact_ok = true;
  const auto c = physical().with_theta(1e-25);
  const double theta = c.theta_natural();
  const double a2 = c.alpha * c.alpha;
  auto analyse = [&](const std::string& tag, int l, double f4, auto&& breakdown) {
    std::vector<EnergyBreakdown> b;
    for (int m = -l; m <= l; ++m) b.push_back(breakdown(m));
    const double spacing = (a2 / 2.0) * f4 * theta;
    std::vector<double> s1;
    for (const auto& x : b) s1.push_back(x.shift_theta1);
    for (int i = 0; i < 2 * l + 1; ++i) {
      const int m = i - l;
      w.update(std::abs(s1[i] + s1[2 * l - i]) / spacing, tag + " oddness m=" + std::to_string(m));
      if (i + 1 < 2 * l + 1) w.update(rel(std::abs(s1[i + 1] - s1[i]), spacing), tag + " spacing m=" + std::to_string(m));
      // Second order does not depend on m_l under the 2/3 average: bitwise equal.
      if (b[i].shift_theta2_f5 != b[0].shift_theta2_f5 || b[i].shift_theta2_f6 != b[0].shift_theta2_f6) exact_ok = false;
    }
    std::vector<double> sorted = s1;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!distinct || s1.size() != static_cast<std::size_t>(2 * l + 1)) exact_ok = false;
  };
  for (auto [n, l] : {std::pair{0, 2}, std::pair{1, 3}}) {
    const double f4 = moment_closed(QuantumNumbers(n, l, 0), c, 4).closed_form;
    analyse(state_label("rel", n, l), l, f4, [&](int m) { return energy_shift_nc(QuantumNumbers(n, l, m), c); });
  }
  for (auto [np, l] : {std::pair{3, 2}, std::pair{4, 3}}) {
    const double f4 = hydrogen_moment_closed(HydrogenState(np, l, 0), c, 4).closed_form;
    analyse(state_label("nr", np, l), l, f4, [&](int m) { return nr_energy_shift(HydrogenState(np, l, m), c); });
  }
  if (!exact_ok) r.notes.push_back("structural check failed (line count or m-independence)");
  finish(r, w, exact_ok);
}

void bound_roundtrip(CheckResult& r) {
  Worst w;
  const auto c = physical();
  BoundRequest req;
  req.model = Model::nonrelativistic;
  req.n = 2;
  req.l = 1;
  req.m_l = 1;
  req.order = BoundOrder::first;
  req.accuracy_ev = hz_to_ev(kLambShiftAccuracyHz, c);
  const auto res = theta_bound(req, c);
  w.update(res.roundtrip_rel_error, "nr 2p m=1 first order at 14 kHz");
  r.notes.push_back("theta_max = " + fmt(res.theta_max_gev2) + " GeV^-2, Lambda = " + fmt(res.lambda_gev) +
                    " GeV; printed bound 2.5e-7 GeV^-2, ratio " + fmt(res.ratio_to_paper) + " (documentation only)");
  // Accuracy grid over every state with n <= 3 the formulas allow.
  bool monotone = true;
  for (Model model : {Model::nonrelativistic, Model::relativistic})
    for (int n = model == Model::relativistic ? 0 : 1; n <= 3; ++n)
      for (int l = 1; l <= 3; ++l) {
        if (model == Model::nonrelativistic && l >= n) continue;
        for (int m = -l; m <= l; ++m)
          for (BoundOrder order : {BoundOrder::first, BoundOrder::second, BoundOrder::both}) {
            if (order == BoundOrder::first && m == 0) continue;
            if (order != BoundOrder::first && l < 2) continue;
            BoundRequest g{model, n, l, m, 0.0, order, AngularMode::spherical_average_2_3};
            double previous = 0.0;
            for (double hz : {1.0, 1e3, 14e3, 1e6}) {
              g.accuracy_ev = hz_to_ev(hz, c);
              const auto b = theta_bound(g, c);
              w.update(b.roundtrip_rel_error, state_label(to_string(model).c_str(), n, l, m) + " " + to_string(order) +
                                                  " " + fmt(hz) + " Hz");
              if (!(b.theta_max_ev2 > previous)) monotone = false;
              previous = b.theta_max_ev2;
            }
          }
      }
  if (!monotone) r.notes.push_back("theta_max is not increasing with accuracy");
  finish(r, w, monotone);
}

// ---------------------------------------------------------- invariants

void quadrature_exactness(CheckResult& r) {
  Worst w;
  const double nu1 = nu_exponent(1, kAlphaPhysical);
  for (double a : {0.0, 0.5, 2.0 * nu1 + 1.0})
    for (int order = 1; order <= 60; ++order) {
      const auto rule = gauss_laguerre_rule(order, a);
      for (int j = 0; j <= 2 * order - 1; ++j) {
        const double exact_log = lgamma(a + j + 1.0);
        double sum = 0.0;
        for (int i = 0; i < order; ++i)
          sum += std::exp(std::log(rule.weights[i]) + j * std::log(rule.nodes[i]) - exact_log);
        w.update(std::abs(sum - 1.0), "order=" + std::to_string(order) + " a=" + fmt(a) + " j=" + std::to_string(j));
      }
    }
  finish(r, w);
}

void halfline_agreement(CheckResult& r) {
  Worst w;
  const auto c = physical();
  auto compare = [&](const RadialWavefunction& wf, int k, const std::string& label) {
    HalflineOptions opts;
    opts.abs_tol = 0.0;
    opts.rel_tol = 1e-12;
    opts.scale = 1.0 / (2.0 * wf.a);
    const auto adaptive = integrate_halfline(
        [&](double x) {
          const double v = wf(x);
          return v * v * std::pow(x, -k);
        },
        opts);
    w.update(rel(adaptive.value, radial_moment_oracle(wf, k).value), label);
  };
  for (int n = 0; n <= 2; ++n)
    for (int l = 1; l <= 3; ++l)
      for (int k = 0; k <= 6; ++k)
        if (k < 2.0 * nu_exponent(l, c.alpha) + 3.0)
          compare(radial_wavefunction(QuantumNumbers(n, l, 0), c), k, state_label("rel", n, l, 0, k));
  finish(r, w);
}

void divergence_honesty(CheckResult& r) {
  int leaks = 0, total = 0;
  const auto c = physical();
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 2; ++l)
      for (int k = 3; k <= 8; ++k) {
        const auto wf = radial_wavefunction(QuantumNumbers(n, l, 0), c);
        if (k < 2.0 * wf.effective_exponent + 3.0) continue;
        ++total;
        try {
          radial_moment_oracle(wf, k);
          ++leaks;
        } catch (const DivergentMoment&) {
        }
        try {
          integrate_halfline([&](double x) {
            const double v = wf(x);
            return v * v * std::pow(x, -k);
          }, HalflineOptions{0.0, 1e-10, 1.0 / (2.0 * wf.a), 4000});
          ++leaks;
        } catch (const DivergentIntegral&) {
        }
      }
  r.measured = leaks;
  r.passed = leaks == 0;
  r.notes.push_back(std::to_string(total) + " divergent (state, k) pairs probed by both quadratures");
}

void specfun_identities(CheckResult& r) {
  Worst w;
  const double nu1 = nu_exponent(1, kAlphaPhysical);
  for (double a : {0.3, 1.0, 2.0 * nu1 + 1.0})
    for (int n = 0; n <= 10; ++n)
      for (int xi = 0; xi <= 50; ++xi) {
        const double x = xi;
        const double scale = std::exp(lgamma(n + a + 1.0) - lgamma(n + 1.0) - lgamma(a + 1.0));
        const double lag = laguerre(n, a, x);
        const double kum = scale * kummer_terminating(n, a + 1.0, x);
        // Relative to the size of the largest partial term so nodes do not
        // blow up the ratio.
        double mag = 0.0;
        for (int j = 0; j <= n; ++j)
          mag = std::max(mag, std::exp(lgamma(n + a + 1.0) - lgamma(n - j + 1.0) - lgamma(a + j + 1.0) -
                                       lgamma(j + 1.0) + j * std::log(std::max(x, 1e-300))));
        w.update(std::abs(lag - kum) / std::max(mag, std::abs(lag)),
                 "kummer n=" + std::to_string(n) + " a=" + fmt(a) + " x=" + fmt(x));
        if (n >= 1) {
          const double up = (n + 1.0) * laguerre(n + 1, a, x);
          const double rhs = (2.0 * n + a + 1.0 - x) * lag - (n + a) * laguerre(n - 1, a, x);
          const double size = std::max({std::abs(up), std::abs((2.0 * n + a + 1.0 - x) * lag),
                                        std::abs((n + a) * laguerre(n - 1, a, x)), 1e-300});
          w.update(std::abs(up - rhs) / size, "recurrence n=" + std::to_string(n) + " a=" + fmt(a) + " x=" + fmt(x));
        }
      }
  finish(r, w);
}

void moment_series_vs_quadrature(CheckResult& r) {
  Worst w;
  for (int n = 0; n <= 6; ++n)
    for (double p : {0.6, 1.5, 3.25, 5.0, 7.9})
      for (double g : {1.1, 2.5, 4.0, 9.5}) {
        const double closed = laguerre_weighted_moment(n, g, p);
        const auto rule = gauss_laguerre_rule(n + 2, p - 1.0);
        const double quad = rule.apply([&](double x) {
          const double f = kummer_terminating(n, g, x);
          return f * f;
        });
        w.update(rel(closed, quad), "n=" + std::to_string(n) + " g=" + fmt(g) + " p=" + fmt(p));
      }
  finish(r, w);
}

void orthonormality(CheckResult& r) {
  Worst w;
  for (double a : {0.0, 0.5, 2.0 * nu_exponent(1, kAlphaPhysical) + 1.0}) {
    const auto rule = gauss_laguerre_rule(8, a);
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n) {
        const double v = rule.apply([&](double x) { return laguerre(m, a, x) * laguerre(n, a, x); });
        const double h = std::exp(lgamma(n + a + 1.0) - lgamma(n + 1.0));
        w.update(m == n ? rel(v, h) : std::abs(v) / h, "a=" + fmt(a) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
  }
  finish(r, w);
}

void kramers_recurrence(CheckResult& r) {
  Worst w;
  const auto c = physical();
  const double a = bohr_radius(c);
  for (int np = 3; np <= 5; ++np)
    for (int l = 2; l < np; ++l) {
      const auto wf = hydrogen_wavefunction(HydrogenState(np, l, 0), c);
      auto moment = [&](int s) {  // <r^s>, s <= -1
        if (s >= -3) return radial_moment_oracle(wf, -s).value;
        return hydrogen_moment_closed(HydrogenState(np, l, 0), c, -s).closed_form;
      };
      const double L = 2.0 * l + 1.0;
      for (int s = -1; s >= -4; --s) {
        // (s+1)/n^2 <r^s> - (2s+1) a <r^{s-1}> + (s/4)((2l+1)^2 - s^2) a^2 <r^{s-2}> = 0
        const double t0 = (s + 1.0) / (np * np) * moment(s);
        const double t1 = -(2.0 * s + 1.0) * a * moment(s - 1);
        const double t2 = (s / 4.0) * (L * L - s * s) * a * a * moment(s - 2);
        const double size = std::max({std::abs(t0), std::abs(t1), std::abs(t2)});
        w.update(std::abs(t0 + t1 + t2) / size, state_label("nr", np, l) + " s=" + std::to_string(s));
      }
    }
  finish(r, w);
}

void nu_properties(CheckResult& r) {
  Worst w;
  bool unique = true;
  for (double alpha : {kAlphaPhysical, 0.2})
    for (int l = 0; l <= 4; ++l)
      for (double e : {0.5, 0.9, 0.9999}) {
        const auto branches = k_candidates(kg_coulomb_problem(e, l, alpha));
        for (const auto& b : branches) {
          const auto diff = b.radicand - b.root * b.root;
          double scale = 1e-300;
          for (double v : b.radicand.coeffs()) scale = std::max(scale, std::abs(v));
          for (double v : diff.coeffs()) w.update(std::abs(v) / scale, "perfect square l=" + std::to_string(l));
        }
        NUBranch sel;
        try {
          sel = select_branch(branches);
        } catch (const Error&) {
          unique = false;
          continue;
        }
        w.update(rel(sel.lambda, kg_coulomb_lambda_printed(e, l, alpha)), "lambda l=" + std::to_string(l));
        // phi'/phi = pi/sigma against r^{1/2+gamma} e^{-a r}.
        const double gamma = std::sqrt((l + 0.5) * (l + 0.5) - alpha * alpha);
        const double a = std::sqrt(1.0 - e * e);
        for (double rr = 0.1; rr <= 10.0; rr += 0.7)
          w.update(rel(sel.pi(rr) / rr, (0.5 + gamma) / rr - a), "phi log-derivative l=" + std::to_string(l));
      }
  if (!unique) r.notes.push_back("branch selection was not unique somewhere");
  finish(r, w, unique);
}

void energy_monotonicity(CheckResult& r) {
  int violations = 0;
  for (double alpha : {kAlphaPhysical, 0.2, 0.45}) {
    const auto c = PhysicalConstants{}.with_alpha(alpha);
    for (int n = 0; n <= 8; ++n)
      for (int l = 0; l <= 5; ++l) {
        const double e = unperturbed_energy(QuantumNumbers(n, l, 0), c);
        if (n < 8 && !(unperturbed_energy(QuantumNumbers(n + 1, l, 0), c) > e)) ++violations;
        if (l < 5 && !(unperturbed_energy(QuantumNumbers(n, l + 1, 0), c) > e)) ++violations;
      }
  }
  r.measured = violations;
  r.passed = violations == 0;
}

void nr_reconstruction(CheckResult& r) {
  Worst w;
  bool converged = true;
  const auto c = physical().with_theta(1e-20);
  for (int np = 3; np <= 5; ++np)
    for (int l = 2; l < np && l <= 3; ++l)
      for (int m : {-l, 0, 1, l})
        for (AngularMode mode : {AngularMode::spherical_average_2_3, AngularMode::exact_lm}) {
          const HydrogenState s(np, l, m);
          const auto ex = expect_perturbation(hydrogen_wavefunction(s, c), l, m, kNonRelativisticEnergyFactor, c, mode);
          converged = converged && ex.converged();
          const auto b = nr_energy_shift(s, c, mode);
          const auto label = state_label("nr", np, l, m) + " " + to_string(mode);
          if (m != 0) w.update(rel(ex.first_order(), b.shift_theta1), label + " first");
          w.update(rel(ex.second_order(), b.shift_theta2_f5 + b.shift_theta2_f6), label + " second");
        }
  finish(r, w, converged);
}

void field_invariants(CheckResult& r) {
  Worst w;
  const auto c = physical();
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 x{coord(rng), coord(rng), coord(rng)};
    const double rr = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    FieldPoint p;
    p.r = rr;
    p.position = x;
    p.theta_ev2 = 1e-12;
    const auto a = ai_deformed(p, c);
    const double dot = x[0] * a[0] + x[1] * a[1] + x[2] * a[2];
    const double size = rr * std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    w.update(size > 0.0 ? std::abs(dot) / size : std::abs(dot), "transversality sample " + std::to_string(i));
  }
  for (double rr = 1e-3; rr <= 1e3; rr *= 1.5) {
    FieldPoint p;
    p.r = rr;
    p.theta_ev2 = 1e-12;
    const double theta = c.with_theta(p.theta_ev2).theta_natural();
    const double correction = std::pow(c.alpha, 2.5) * theta * theta * kThetaContraction / (20.0 * std::pow(rr, 5));
    const double e = std::sqrt(c.alpha);
    const double a0 = a0_deformed(p, c);
    w.update(std::abs(a0 - (-e / rr + correction)) / std::max(e / rr, correction), "a0 r=" + fmt(rr));
    p.theta_ev2 = 0.0;
    w.update(rel(a0_deformed(p, c), -e / rr), "a0 commutative limit r=" + fmt(rr));
  }
  finish(r, w);
}

void unit_roundtrip(CheckResult& r) {
  Worst w;
  const auto c = PhysicalConstants{};
  for (double v : {1.0, -2.6625e-5, 3.3e-17, 12345.678, -0.5})
    w.update(rel(from_ev(to_ev(v, c), c), v), "natural->eV->natural " + fmt(v));
  finish(r, w);
}

void bound_dominance(CheckResult& r) {
  Worst w;
  const auto c = physical();
  // Third-order-free states with both terms finite: l >= 2, m != 0.
  for (Model model : {Model::nonrelativistic, Model::relativistic})
    for (auto [n, l, m] : {std::tuple{3, 2, 1}, std::tuple{3, 2, -2}, std::tuple{4, 3, 2}}) {
      const int nn = model == Model::relativistic ? n - l - 1 : n;
      for (double hz : {1.0, 1e3}) {
        BoundRequest req{model, nn, l, m, hz_to_ev(hz, c), BoundOrder::first, AngularMode::spherical_average_2_3};
        const auto first = theta_bound(req, c);
        req.order = BoundOrder::both;
        const auto both = theta_bound(req, c);
        // Below the crossover: |c2| theta / |c1| small.
        const double ratio = std::abs(both.second_order_coefficient) * first.theta_max_ev2 /
                             std::abs(first.first_order_coefficient);
        if (ratio < 1e-7)
          w.update(rel(both.theta_max_ev2, first.theta_max_ev2),
                   state_label(to_string(model).c_str(), nn, l, m) + " " + fmt(hz) + " Hz");
      }
    }
  finish(r, w);
}

void sweep_determinism(CheckResult& r) {
  const auto c = physical().with_theta(1e-25);
  std::vector<StateSpec> states;
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l)
      for (int m = -l; m <= l; ++m) states.push_back({Model::relativistic, n, l, m});
  const auto a = spectrum_sweep(states, c, AngularMode::spherical_average_2_3, Execution::serial);
  const auto b = spectrum_sweep(states, c, AngularMode::spherical_average_2_3, Execution::parallel);
  int mismatches = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].e0 != b[i].e0 || a[i].shift_theta1 != b[i].shift_theta1 || a[i].shift_theta2_f5 != b[i].shift_theta2_f5 ||
        a[i].shift_theta2_f6 != b[i].shift_theta2_f6 || a[i].total != b[i].total || a[i].state != b[i].state)
      ++mismatches;
  r.measured = mismatches;
  r.passed = mismatches == 0;
}

}  // namespace

std::vector<Check> acceptance_checks() {
  return {
      {"A1", "energy formula identity (n<=8, l<=5)", 1e-12, 1.0, energy_identity},
      {"A2", "NU eigenvalue root-finding reproduces E0", 1e-10, 5.0, nu_crosscheck},
      {"A3", "wavefunction normalization by quadrature", 1e-9, 2.0, normalization},
      {"A4", "closed-form moments vs Gauss-Laguerre oracle", 1e-10, 5.0, moment_oracle},
      {"A5", "printed-formula audit (closed forms gate, printed forms logged)", 1e-10, 0.0, printed_formula_audit},
      {"A6", "perturbation reconstruction of the theta shifts", 1e-8, 5.0, shift_reconstruction},
      {"A7", "non-relativistic limit (2 alpha^2 bound; alpha=1e-4 deviation)", 1e-7, 0.0, nonrel_limit},
      {"A8", "m_l splitting structure at theta=1e-25 eV^-2", 1e-12, 0.0, splitting},
      {"A9", "theta bound round-trip at 14 kHz", 1e-10, 0.0, bound_roundtrip},
  };
}

std::vector<Check> invariant_checks() {
  return {
      {"quadrature.exactness", "Gauss-Laguerre exact on x^j, j <= 2N-1 (N <= 60)", 1e-12, 0.0, quadrature_exactness},
      {"quadrature.agreement", "adaptive half-line vs Gauss-Laguerre on convergent moments", 1e-10, 0.0,
       halfline_agreement},
      {"quadrature.divergence", "divergent moments never yield numbers", 0.0, 0.0, divergence_honesty},
      {"specfun.identities", "Kummer-Laguerre relation and three-term recurrence", 1e-12, 0.0, specfun_identities},
      {"specfun.moment_series", "moment series vs quadrature", 1e-10, 0.0, moment_series_vs_quadrature},
      {"specfun.orthonormality", "Laguerre orthogonality", 1e-10, 0.0, orthonormality},
      {"nu.properties", "perfect square, lambda, phi, unique branch", 1e-10, 0.0, nu_properties},
      {"kgnc.monotonicity", "E0 increases with n and l", 0.0, 0.0, energy_monotonicity},
      {"nrlimit.kramers", "Kramers recurrence on hydrogen moments", 1e-9, 0.0, kramers_recurrence},
      {"nrlimit.reconstruction", "perturbation reconstruction of the non-relativistic shifts", 1e-8, 0.0,
       nr_reconstruction},
      {"ncfield.invariants", "gauge-potential transversality and a0 correction", 1e-14, 0.0, field_invariants},
      {"core.units", "unit round-trip", 1e-14, 0.0, unit_roundtrip},
      {"bounds.dominance", "both-order bound equals first-order bound below crossover", 1e-6, 0.0, bound_dominance},
      {"sweep.determinism", "parallel sweep equals serial reference", 0.0, 0.0, sweep_determinism},
  };
}

CheckResult run_check(const Check& check) {
  CheckResult r;
  r.id = check.id;
  r.title = check.title;
  r.tolerance = check.tolerance;
  r.time_limit = check.time_limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    check.body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.notes.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.time_limit > 0.0 && r.seconds > r.time_limit) {
    r.passed = false;
    r.notes.push_back("exceeded time limit of " + fmt(r.time_limit) + " s");
  }
  return r;
}

}  // namespace nckg::verify
