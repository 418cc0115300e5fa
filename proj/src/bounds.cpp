#include "nckg/bounds.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "nckg/nrlimit.hpp"

namespace nckg {

std::string to_string(Model m) { return m == Model::relativistic ? "rel" : "nr"; }

Model model_from_string(const std::string& s) {
  if (s == "rel" || s == "relativistic") return Model::relativistic;
  if (s == "nr" || s == "nonrelativistic") return Model::nonrelativistic;
  throw DomainError("unknown model '" + s + "'");
}

std::string to_string(BoundOrder o) {
  switch (o) {
    case BoundOrder::first: return "first";
    case BoundOrder::second: return "second";
    default: return "both";
  }
}

BoundOrder bound_order_from_string(const std::string& s) {
  if (s == "first") return BoundOrder::first;
  if (s == "second") return BoundOrder::second;
  if (s == "both") return BoundOrder::both;
  throw DomainError("unknown bound order '" + s + "'");
}

namespace {

struct Terms {
  double first = 0.0, f5 = 0.0, f6 = 0.0;  // natural units
};

// Only the terms the order needs are evaluated, so an unused divergent
// moment does not block the bound.
Terms shift_terms(const BoundRequest& req, const PhysicalConstants& c, bool need_first, bool need_second) {
  Terms t;
  if (req.model == Model::relativistic) {
    const QuantumNumbers q(req.n, req.l, req.m_l);
    if (need_first) t.first = shift_first_order(q, c);
    if (need_second) {
      t.f5 = shift_second_order_f5(q, c);
      t.f6 = shift_second_order_f6(q, c, req.angular);
    }
  } else {
    const HydrogenState s(req.n, req.l, req.m_l);
    if (need_first) t.first = nr_shift_first_order(s, c);
    if (need_second) {
      t.f5 = nr_shift_second_order_f5(s, c);
      t.f6 = nr_shift_second_order_f6(s, c, req.angular);
    }
  }
  return t;
}

// Positive roots of c2 x^2 + c1 x + c0 = 0.
std::vector<double> positive_roots(double c2, double c1, double c0) {
  std::vector<double> roots;
  if (c2 == 0.0) {
    if (c1 != 0.0) roots.push_back(-c0 / c1);
  } else {
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc >= 0.0) {
      const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
      if (q != 0.0) {
        roots.push_back(q / c2);
        roots.push_back(c0 / q);
      } else {
        roots.push_back(0.0);
      }
    }
  }
  std::vector<double> out;
  for (double r : roots)
    if (r > 0.0 && std::isfinite(r)) out.push_back(r);
  return out;
}

}  // namespace

EnergyBreakdown shift_for_request(const BoundRequest& req, const PhysicalConstants& c, double theta_ev2) {
  const auto ct = c.with_theta(theta_ev2);
  const bool first = req.order != BoundOrder::second;
  const bool second = req.order != BoundOrder::first;
  const auto t = shift_terms(req, ct, first, second);
  return EnergyBreakdown::from_terms(0.0, t.first, t.f5, t.f6).scaled(c.m_e_ev);
}

BoundResult theta_bound(const BoundRequest& req, const PhysicalConstants& c) {
  c.validate();
  if (!(req.accuracy_ev > 0.0)) throw DomainError("accuracy must be positive");
  if (req.order == BoundOrder::first && req.m_l == 0)
    throw NoFirstOrderSensitivity("m_l = 0 has no first-order theta shift");

  const bool first = req.order != BoundOrder::second;
  const bool second = req.order != BoundOrder::first;
  // Coefficients at unit theta (natural units): Delta E = c1 theta + c2 theta^2.
  const auto unit = shift_terms(req, c.with_theta(1.0 / (c.m_e_ev * c.m_e_ev)), first, second);
  const double c1 = unit.first;
  const double c2 = unit.f5 + unit.f6;
  const double target = from_ev(req.accuracy_ev, c);

  double theta_nat = std::numeric_limits<double>::infinity();
  for (double sign : {1.0, -1.0})
    for (double r : positive_roots(c2, c1, -sign * target)) theta_nat = std::min(theta_nat, r);
  if (!std::isfinite(theta_nat))
    throw NoFirstOrderSensitivity("the requested shift terms vanish for this state");

  BoundResult out;
  out.theta_max_ev2 = theta_nat / (c.m_e_ev * c.m_e_ev);
  out.theta_max_gev2 = out.theta_max_ev2 * 1e18;
  out.lambda_gev = 1.0 / std::sqrt(out.theta_max_gev2);
  out.first_order_coefficient = c1 * c.m_e_ev * c.m_e_ev * c.m_e_ev;
  out.second_order_coefficient = c2 * std::pow(c.m_e_ev, 5);
  out.shift_at_bound = shift_for_request(req, c, out.theta_max_ev2);
  out.roundtrip_rel_error = std::abs(std::abs(out.shift_at_bound.shift()) / req.accuracy_ev - 1.0);
  const double a1 = std::abs(out.shift_at_bound.shift_theta1);
  const double a5 = std::abs(out.shift_at_bound.shift_theta2_f5);
  const double a6 = std::abs(out.shift_at_bound.shift_theta2_f6);
  out.dominant_term = (a1 >= a5 && a1 >= a6) ? "shift_theta1" : (a5 >= a6 ? "shift_theta2_f5" : "shift_theta2_f6");
  out.ratio_to_paper = out.theta_max_gev2 / kPaperThetaBoundGeV2;
  return out;
}

}  // namespace nckg
