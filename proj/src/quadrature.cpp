#include "nckg/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include <Eigen/Eigenvalues>

#include "nckg/specfun.hpp"

namespace nckg {

namespace {

// L_N^a(x) and L_{N-1}^a(x), both divided by exp(log_scale).
struct LaguerrePair {
  double top = 1.0;
  double below = 0.0;
  double log_scale = 0.0;
};

LaguerrePair laguerre_pair(int order, double a, double x) {
  constexpr double kBig = 1e100;
  double prev = 1.0;
  double curr = 1.0 + a - x;
  double log_scale = 0.0;
  for (int k = 1; k < order; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * curr - (k + a) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
    if (std::abs(curr) > kBig) {
      curr /= kBig;
      prev /= kBig;
      log_scale += std::log(kBig);
    }
  }
  return {curr, prev, log_scale};
}

}  // namespace

QuadratureRule gauss_laguerre_rule(int order, double a) {
  if (order < 1 || order > 200) throw DomainError("Gauss-Laguerre order must lie in [1, 200]");
  if (!(a > -1.0)) throw DomainError("Gauss-Laguerre weight exponent must exceed -1");

  // Jacobi matrix of the monic Laguerre recurrence.
  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(std::max(order - 1, 0));
  for (int i = 0; i < order; ++i) diag(i) = 2.0 * i + 1.0 + a;
  for (int i = 0; i + 1 < order; ++i) sub(i) = std::sqrt((i + 1.0) * (i + 1.0 + a));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  QuadratureRule rule;
  rule.order = order;
  rule.weight_exponent = a;
  rule.nodes.resize(order);
  rule.weights.resize(order);

  const double log_gamma_ratio = lgamma(order + a + 1.0) - lgamma(order + 1.0);
  for (int i = 0; i < order; ++i) {
    double x = solver.eigenvalues()(i);
    for (int iter = 0; iter < 20; ++iter) {
      const auto p = laguerre_pair(order, a, x);
      const double step = x * p.top / (order * p.top - (order + a) * p.below);
      x -= step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * x) break;
    }
    const auto p = laguerre_pair(order, a, x);
    const double log_w = log_gamma_ratio + std::log(x) - 2.0 * std::log(order + a) -
                         2.0 * (std::log(std::abs(p.below)) + p.log_scale);
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_w);
  }
  return rule;
}

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo = 0.0, hi = 0.0;
  double value = 0.0, error = 0.0;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class G>
Segment gk15(const G& g, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = g(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double resabs = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = g(center - dx);
    const double f2 = g(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  Segment s{lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * resabs * std::abs(half);
  s.error = std::max(s.error, roundoff);
  return s;
}

template <class G>
IntegralResult adaptive(const G& g, const std::vector<std::pair<double, double>>& pieces,
                        double abs_tol, double rel_tol, int max_intervals) {
  std::priority_queue<Segment> queue;
  double value = 0.0;
  double error = 0.0;
  for (auto [lo, hi] : pieces) {
    if (hi <= lo) continue;
    auto s = gk15(g, lo, hi);
    value += s.value;
    error += s.error;
    queue.push(s);
  }
  int count = static_cast<int>(queue.size());
  auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(value)); };
  while (error > target() && count < max_intervals && !queue.empty()) {
    const auto worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;  // interval at machine resolution
    queue.pop();
    const auto left = gk15(g, worst.lo, mid);
    const auto right = gk15(g, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++count;
  }
  // Re-sum to shed accumulated update drift.
  value = 0.0;
  error = 0.0;
  while (!queue.empty()) {
    value += queue.top().value;
    error += queue.top().error;
    queue.pop();
  }
  return {value, error, error <= std::max(abs_tol, rel_tol * std::abs(value))};
}

}  // namespace

IntegralResult integrate_halfline(const std::function<double(double)>& f,
                                  const HalflineOptions& opts) {
  if (!(opts.scale > 0.0)) throw DomainError("integration scale must be positive");
  const double scale = opts.scale;
  // Probe points eps_k = scale * 10^{-3k}, k = 0..4.
  std::array<double, 5> eps{};
  for (int k = 0; k < 5; ++k) eps[k] = scale * std::pow(10.0, -3.0 * k);

  const int budget = std::max(opts.max_intervals / 8, 64);
  auto abs_f = [&](double x) { return std::abs(f(x)); };
  // block[k] = int_{eps[k+1]}^{eps[k]} |f|
  std::array<double, 4> block{};
  for (int k = 0; k < 4; ++k)
    block[k] = adaptive(abs_f, {{eps[k + 1], eps[k]}}, 0.0, 1e-10, budget).value;

  const double p1 = block[0];
  const double p4 = block[0] + block[1] + block[2] + block[3];
  if (p1 > 0.0 && p4 > 10.0 * p1)
    throw DivergentIntegral("partial integral near the origin grew " + std::to_string(p4 / p1) +
                            "x over three refinements");
  // Decade-block ratio rho = 10^{-3(1+s)} for f ~ x^s; rho >= 10^{-0.06} means s <= -0.98.
  if (block[2] > 0.0 && block[3] / block[2] >= std::pow(10.0, -0.06))
    throw DivergentIntegral("integrand behaves like x^s with s <= -0.98 near the origin");

  // Infinite piece, x = scale * (1 + t/(1-t)).
  auto tail_g = [&](double t) {
    const double u = 1.0 - t;
    return f(scale * (1.0 + t / u)) * scale / (u * u);
  };
  const auto far = adaptive(tail_g, {{0.0, 1.0}}, opts.abs_tol * 0.5, opts.rel_tol * 0.5,
                            opts.max_intervals / 2);
  const auto near = adaptive(f, {{eps[4], eps[3]}, {eps[3], eps[2]}, {eps[2], eps[1]}, {eps[1], eps[0]}},
                             opts.abs_tol * 0.5, opts.rel_tol * 0.5, opts.max_intervals / 2);

  // [0, eps_4]: geometric extrapolation of the signed decade blocks. For a
  // pure power law the block ratio is constant and the sum exact, so the
  // error is the drift in the ratio between consecutive blocks.
  const double b1 = adaptive(f, {{eps[2], eps[1]}}, 0.0, 1e-12, budget).value;
  const double b2 = adaptive(f, {{eps[3], eps[2]}}, 0.0, 1e-12, budget).value;
  const double b3 = adaptive(f, {{eps[4], eps[3]}}, 0.0, 1e-12, budget).value;
  double origin = 0.0;
  double origin_err = 0.0;
  if (b2 != 0.0) {
    const double rho = b3 / b2;
    if (rho > -1.0 && rho < 1.0) {
      origin = b3 * rho / (1.0 - rho);
      const double drift = b1 != 0.0 ? std::abs(rho - b2 / b1) / std::max(std::abs(rho), 1e-300) : 1.0;
      origin_err = std::abs(origin) * (std::min(drift, 1.0) + 1e-10);
    } else {
      origin_err = std::abs(b3);
    }
  }

  IntegralResult out;
  out.value = near.value + far.value + origin;
  out.abs_error_estimate = near.abs_error_estimate + far.abs_error_estimate + origin_err;
  out.converged = near.converged && far.converged &&
                  out.abs_error_estimate <= std::max(opts.abs_tol, opts.rel_tol * std::abs(out.value));
  return out;
}

IntegralResult integrate_halfline(const std::function<double(double)>& f, double tol) {
  HalflineOptions opts;
  opts.abs_tol = tol;
  return integrate_halfline(f, opts);
}

IntegralResult radial_moment_oracle(const RadialWavefunction& w, int k) {
  const double exponent = 2.0 * w.effective_exponent + 2.0 - k;
  if (!(exponent > -1.0))
    throw DivergentMoment("<r^-" + std::to_string(k) + "> diverges: weight exponent " +
                          std::to_string(exponent) + " <= -1");
  const double lag_a = w.laguerre_parameter();
  auto square = [&](double x) {
    const double v = laguerre(w.n, lag_a, x);
    return v * v;
  };
  const double prefactor = w.norm * w.norm * std::pow(2.0 * w.a, k - 1);
  const double v1 = prefactor * gauss_laguerre_rule(w.n + 2, exponent).apply(square);
  const double v2 = prefactor * gauss_laguerre_rule(w.n + 3, exponent).apply(square);
  return {v1, std::abs(v1 - v2) + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v1), true};
}

}  // namespace nckg
