#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace nckg {

// Error taxonomy. Every computational failure is one of these; the CLI maps
// them onto exit code 3 with a JSON error object.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define NCKG_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  };

NCKG_DEFINE_ERROR(DomainError)
NCKG_DEFINE_ERROR(DivergentMoment)
NCKG_DEFINE_ERROR(DivergentIntegral)
NCKG_DEFINE_ERROR(NoPolynomialSolution)
NCKG_DEFINE_ERROR(NoAdmissibleBranch)
NCKG_DEFINE_ERROR(AmbiguousBranch)
NCKG_DEFINE_ERROR(NoFirstOrderSensitivity)
NCKG_DEFINE_ERROR(ConfigError)

#undef NCKG_DEFINE_ERROR

/// Physical inputs. Internally everything runs in natural units with
/// hbar = c = m_e = 1; `m_e_ev` is only used at the boundary.
struct PhysicalConstants {
  double alpha = 7.2973525693e-3;   // CODATA 2018
  double m_e_ev = 510998.95;        // eV
  double hbar_ev_s = 6.582119569e-16;
  double theta_ev2 = 0.0;           // eV^-2, only theta_3 nonzero

  /// Throws DomainError unless 0 < alpha < 1, m_e > 0, hbar > 0, theta >= 0.
  /// States with (l + 1/2)^2 <= alpha^2 are rejected later, per state.
  void validate() const;

  /// theta in units of m_e^-2.
  double theta_natural() const { return theta_ev2 * m_e_ev * m_e_ev; }

  PhysicalConstants with_alpha(double a) const {
    auto c = *this;
    c.alpha = a;
    return c;
  }
  PhysicalConstants with_theta(double theta) const {
    auto c = *this;
    c.theta_ev2 = theta;
    return c;
  }
};

/// Loads a constants file (JSON keys alpha, m_e_ev, hbar_ev_s,
/// theta_ev_minus2). Missing keys keep their CODATA defaults.
PhysicalConstants load_constants(const std::string& path);
PhysicalConstants parse_constants(const std::string& json_text);

/// Relativistic state labels. `n` is the radial quantum number (degree of
/// the Laguerre polynomial), not the principal one.
class QuantumNumbers {
 public:
  QuantumNumbers(int n, int l, int m_l);
  int n() const { return n_; }
  int l() const { return l_; }
  int m_l() const { return m_l_; }
  int principal() const { return n_ + l_ + 1; }
  QuantumNumbers with_m_l(int m) const { return {n_, l_, m}; }
  bool operator==(const QuantumNumbers&) const = default;

 private:
  int n_, l_, m_l_;
};

enum class UnitSystem { natural, electronvolt };

// Natural <-> eV. Energies in natural units are multiples of m_e.
double to_ev(double natural_energy, const PhysicalConstants& c);
double from_ev(double ev, const PhysicalConstants& c);
double convert_energy(double natural_energy, UnitSystem units,
                      const PhysicalConstants& c);

/// E = h nu = 2 pi hbar nu (not hbar nu).
double hz_to_ev(double frequency_hz, const PhysicalConstants& c);

struct EnergyBreakdown {
  double e0 = 0.0;
  double shift_theta1 = 0.0;
  double shift_theta2_f5 = 0.0;
  double shift_theta2_f6 = 0.0;
  double total = 0.0;

  // total is always formed here, in this summation order.
  static EnergyBreakdown from_terms(double e0, double s1, double s5,
                                    double s6) {
    return {e0, s1, s5, s6, e0 + s1 + s5 + s6};
  }
  double shift() const { return shift_theta1 + shift_theta2_f5 + shift_theta2_f6; }
  EnergyBreakdown scaled(double factor) const {
    return from_terms(e0 * factor, shift_theta1 * factor,
                      shift_theta2_f5 * factor, shift_theta2_f6 * factor);
  }
};

struct IntegralResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  bool converged = false;
};

/// Closed form vs quadrature vs literally printed expression for <r^-k>.
struct MomentComparison {
  int k = 0;
  double closed_form = 0.0;
  IntegralResult oracle;
  std::optional<double> paper_fidelity;
  double rel_discrepancy = 0.0;            // |closed - oracle| / |oracle|
  std::optional<double> paper_discrepancy; // |printed - oracle| / |oracle|
};

}  // namespace nckg
