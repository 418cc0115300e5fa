#include "nckg/core.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace nckg {

void PhysicalConstants::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  if (!(m_e_ev > 0.0)) throw DomainError("m_e must be positive");
  if (!(hbar_ev_s > 0.0)) throw DomainError("hbar must be positive");
  if (!(theta_ev2 >= 0.0)) throw DomainError("theta must be non-negative");
}

PhysicalConstants parse_constants(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid constants JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("constants file must hold a JSON object");
  PhysicalConstants c;
  auto read = [&](const char* key, double& into) {
    if (!j.contains(key)) return;
    if (!j[key].is_number())
      throw ConfigError(std::string("constants key '") + key + "' must be a number");
    into = j[key].get<double>();
  };
  read("alpha", c.alpha);
  read("m_e_ev", c.m_e_ev);
  read("hbar_ev_s", c.hbar_ev_s);
  read("theta_ev_minus2", c.theta_ev2);
  c.validate();
  return c;
}

PhysicalConstants load_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open constants file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_constants(buf.str());
}

QuantumNumbers::QuantumNumbers(int n, int l, int m_l) : n_(n), l_(l), m_l_(m_l) {
  if (n < 0) throw DomainError("radial quantum number n must be >= 0");
  if (l < 0) throw DomainError("orbital quantum number l must be >= 0");
  if (std::abs(m_l) > l) throw DomainError("|m_l| must not exceed l");
}

double to_ev(double natural_energy, const PhysicalConstants& c) {
  return natural_energy * c.m_e_ev;
}

double from_ev(double ev, const PhysicalConstants& c) { return ev / c.m_e_ev; }

double convert_energy(double natural_energy, UnitSystem units,
                      const PhysicalConstants& c) {
  return units == UnitSystem::natural ? natural_energy : to_ev(natural_energy, c);
}

double hz_to_ev(double frequency_hz, const PhysicalConstants& c) {
  if (frequency_hz < 0.0) throw DomainError("frequency must be >= 0");
  return 2.0 * std::numbers::pi * c.hbar_ev_s * frequency_hz;
}

}  // namespace nckg
