#include "nckg/sweep.hpp"

#include <limits>

#include "nckg/nrlimit.hpp"
#include "nckg/nu.hpp"

namespace nckg {

namespace {

template <class Fn>
std::optional<double> guarded(Fn&& fn, const char* label, std::vector<std::string>& warnings) {
  try {
    return fn();
  } catch (const Error& e) {
    warnings.push_back(std::string(label) + ": " + e.kind() + ": " + e.what());
    return std::nullopt;
  }
}

template <class In, class Out, class Kernel>
std::vector<Out> run(std::span<const In> in, Execution exec, Kernel&& kernel) {
  std::vector<Out> out(in.size());
  const long count = static_cast<long>(in.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) out[i] = kernel(in[i]);
  } else {
    for (long i = 0; i < count; ++i) out[i] = kernel(in[i]);
  }
  return out;
}

}  // namespace

SpectrumRow spectrum_row(const StateSpec& s, const PhysicalConstants& c, AngularMode mode) {
  SpectrumRow row;
  row.state = s;
  try {
    const bool nonzero = c.theta_ev2 != 0.0;
    if (s.model == Model::relativistic) {
      const QuantumNumbers q(s.n, s.l, s.m_l);
      row.e0 = unperturbed_energy(q, c);
      if (!nonzero) {
        row.shift_theta1 = row.shift_theta2_f5 = row.shift_theta2_f6 = 0.0;
      } else {
        row.shift_theta1 = guarded([&] { return shift_first_order(q, c); }, "shift_theta1", row.warnings);
        row.shift_theta2_f5 = guarded([&] { return shift_second_order_f5(q, c); }, "shift_theta2_f5", row.warnings);
        row.shift_theta2_f6 =
            guarded([&] { return shift_second_order_f6(q, c, mode); }, "shift_theta2_f6", row.warnings);
      }
    } else {
      const HydrogenState h(s.n, s.l, s.m_l);
      row.e0 = bohr_energy(h, c);
      if (!nonzero) {
        row.shift_theta1 = row.shift_theta2_f5 = row.shift_theta2_f6 = 0.0;
      } else {
        row.shift_theta1 = guarded([&] { return nr_shift_first_order(h, c); }, "shift_theta1", row.warnings);
        row.shift_theta2_f5 = guarded([&] { return nr_shift_second_order_f5(h, c); }, "shift_theta2_f5", row.warnings);
        row.shift_theta2_f6 =
            guarded([&] { return nr_shift_second_order_f6(h, c, mode); }, "shift_theta2_f6", row.warnings);
      }
    }
    if (row.shift_theta1 && row.shift_theta2_f5 && row.shift_theta2_f6)
      row.total = EnergyBreakdown::from_terms(row.e0, *row.shift_theta1, *row.shift_theta2_f5, *row.shift_theta2_f6).total;
  } catch (const Error& e) {
    row.error_kind = e.kind();
    row.error_message = e.what();
  }
  return row;
}

MomentRow moment_row(const MomentTask& t, const PhysicalConstants& c) {
  MomentRow row;
  row.task = t;
  try {
    if (t.state.model == Model::relativistic)
      row.comparison = moment_closed(QuantumNumbers(t.state.n, t.state.l, t.state.m_l), c, t.k);
    else
      row.comparison = hydrogen_moment_closed(HydrogenState(t.state.n, t.state.l, t.state.m_l), c, t.k);
  } catch (const Error& e) {
    row.error_kind = e.kind();
    row.error_message = e.what();
  }
  return row;
}

std::vector<SpectrumRow> spectrum_sweep(std::span<const StateSpec> states, const PhysicalConstants& c,
                                        AngularMode mode, Execution exec) {
  return run<StateSpec, SpectrumRow>(states, exec, [&](const StateSpec& s) { return spectrum_row(s, c, mode); });
}

std::vector<MomentRow> moment_sweep(std::span<const MomentTask> tasks, const PhysicalConstants& c, Execution exec) {
  return run<MomentTask, MomentRow>(tasks, exec, [&](const MomentTask& t) { return moment_row(t, c); });
}

std::vector<double> nu_energy_sweep(std::span<const StateSpec> states, double alpha, Execution exec) {
  const auto c = PhysicalConstants{}.with_alpha(alpha);
  return run<StateSpec, double>(states, exec, [&](const StateSpec& s) {
    try {
      const QuantumNumbers q(s.n, s.l, 0);
      return solve_kg_coulomb_energy(s.n, s.l, alpha, unperturbed_energy(q, c)).energy;
    } catch (const Error&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  });
}

}  // namespace nckg
