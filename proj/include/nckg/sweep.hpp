#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nckg/bounds.hpp"
#include "nckg/core.hpp"
#include "nckg/kgnc.hpp"

namespace nckg {

enum class Execution { serial, parallel };

struct StateSpec {
  Model model = Model::relativistic;
  int n = 0, l = 0, m_l = 0;  // n radial (rel) or principal (nr)
  auto operator<=>(const StateSpec&) const = default;
};

/// One spectrum line, natural units. A term that diverges for the state is
/// left empty with a warning rather than failing the whole row.
struct SpectrumRow {
  StateSpec state;
  double e0 = 0.0;
  std::optional<double> shift_theta1, shift_theta2_f5, shift_theta2_f6, total;
  std::vector<std::string> warnings;
  std::optional<std::string> error_kind, error_message;  // state-level failure
};

struct MomentTask {
  StateSpec state;
  int k = 4;
  auto operator<=>(const MomentTask&) const = default;
};

struct MomentRow {
  MomentTask task;
  std::optional<MomentComparison> comparison;
  std::optional<std::string> error_kind, error_message;
};

SpectrumRow spectrum_row(const StateSpec& s, const PhysicalConstants& c, AngularMode mode);
MomentRow moment_row(const MomentTask& t, const PhysicalConstants& c);

/// Row i of the result always corresponds to input i regardless of the
/// execution mode, so serial and parallel output are identical.
std::vector<SpectrumRow> spectrum_sweep(std::span<const StateSpec> states, const PhysicalConstants& c,
                                        AngularMode mode, Execution exec = Execution::parallel);
std::vector<MomentRow> moment_sweep(std::span<const MomentTask> tasks, const PhysicalConstants& c,
                                    Execution exec = Execution::parallel);

/// NU root-find energies for a (n, l) grid, one entry per pair.
std::vector<double> nu_energy_sweep(std::span<const StateSpec> states, double alpha,
                                    Execution exec = Execution::parallel);

}  // namespace nckg
