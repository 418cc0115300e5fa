#pragma once

#include <string>

#include "nckg/core.hpp"
#include "nckg/kgnc.hpp"

namespace nckg {

enum class Model { relativistic, nonrelativistic };
enum class BoundOrder { first, second, both };

std::string to_string(Model m);
Model model_from_string(const std::string& s);
std::string to_string(BoundOrder o);
BoundOrder bound_order_from_string(const std::string& s);

/// (n, l, m_l): n is radial for the relativistic model, principal for the
/// non-relativistic one.
struct BoundRequest {
  Model model = Model::nonrelativistic;
  int n = 2, l = 1, m_l = 1;
  double accuracy_ev = 0.0;
  BoundOrder order = BoundOrder::first;
  AngularMode angular = AngularMode::spherical_average_2_3;
};

inline constexpr double kPaperThetaBoundGeV2 = 2.5e-7;  // (2e3 GeV)^-2
inline constexpr double kLambShiftAccuracyHz = 14e3;

struct BoundResult {
  double theta_max_ev2 = 0.0;
  double theta_max_gev2 = 0.0;
  double lambda_gev = 0.0;           // theta_max^(-1/2)
  std::string dominant_term;         // shift_theta1 | shift_theta2_f5 | shift_theta2_f6
  double first_order_coefficient = 0.0;   // Delta E = c1 theta + c2 theta^2, eV and eV^-2
  double second_order_coefficient = 0.0;
  EnergyBreakdown shift_at_bound;    // eV
  double roundtrip_rel_error = 0.0;  // | |Delta E(theta_max)| / accuracy - 1 |
  double ratio_to_paper = 0.0;       // theta_max_gev2 / kPaperThetaBoundGeV2
};

/// Smallest theta > 0 with |Delta E(theta)| = accuracy. Throws
/// NoFirstOrderSensitivity for m_l = 0 with order = first, DivergentMoment
/// when a required moment diverges.
BoundResult theta_bound(const BoundRequest& req, const PhysicalConstants& c);

/// Shift breakdown in eV for the request's state at the given theta.
EnergyBreakdown shift_for_request(const BoundRequest& req, const PhysicalConstants& c, double theta_ev2);

}  // namespace nckg
