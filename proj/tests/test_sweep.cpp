#include <doctest.h>

#include <cmath>

#include "nckg/kgnc.hpp"
#include "nckg/nrlimit.hpp"
#include "nckg/sweep.hpp"

using namespace nckg;

namespace {
std::vector<StateSpec> grid(Model model) {
  std::vector<StateSpec> v;
  for (int n = model == Model::relativistic ? 0 : 1; n <= 4; ++n)
    for (int l = 0; l <= 3; ++l) {
      if (model == Model::nonrelativistic && l >= n) continue;
      for (int m = -l; m <= l; ++m) v.push_back({model, n, l, m});
    }
  return v;
}
}  // namespace

TEST_CASE("parallel sweep equals the serial reference bit for bit") {
  const auto c = PhysicalConstants{}.with_theta(1e-25);
  for (Model model : {Model::relativistic, Model::nonrelativistic}) {
    const auto states = grid(model);
    const auto a = spectrum_sweep(states, c, AngularMode::exact_lm, Execution::serial);
    const auto b = spectrum_sweep(states, c, AngularMode::exact_lm, Execution::parallel);
    REQUIRE(a.size() == states.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].state == states[i]);
      CHECK(b[i].state == states[i]);
      CHECK(a[i].e0 == b[i].e0);
      CHECK(a[i].shift_theta1 == b[i].shift_theta1);
      CHECK(a[i].shift_theta2_f5 == b[i].shift_theta2_f5);
      CHECK(a[i].shift_theta2_f6 == b[i].shift_theta2_f6);
      CHECK(a[i].warnings == b[i].warnings);
    }
  }
}

TEST_CASE("spectrum rows keep defined terms and flag divergent ones") {
  const auto c = PhysicalConstants{}.with_theta(1e-25);
  const auto row = spectrum_row({Model::relativistic, 0, 0, 0}, c, AngularMode::spherical_average_2_3);
  CHECK(row.shift_theta1 == 0.0);
  CHECK_FALSE(row.shift_theta2_f5.has_value());
  CHECK_FALSE(row.shift_theta2_f6.has_value());
  CHECK_FALSE(row.total.has_value());
  CHECK(row.warnings.size() == 2);
  const auto full = spectrum_row({Model::relativistic, 1, 2, 1}, c, AngularMode::spherical_average_2_3);
  REQUIRE(full.total.has_value());
  CHECK(*full.total == total_energy(QuantumNumbers(1, 2, 1), c).total);
  const auto bad = spectrum_row({Model::nonrelativistic, 1, 1, 0}, c, AngularMode::spherical_average_2_3);
  CHECK(bad.error_kind == std::optional<std::string>("DomainError"));
  const auto zero = spectrum_row({Model::nonrelativistic, 1, 0, 0}, c.with_theta(0.0), AngularMode::exact_lm);
  CHECK(zero.total == zero.e0);
}

TEST_CASE("moment and energy sweeps") {
  const PhysicalConstants c;
  const std::vector<MomentTask> tasks{{{Model::nonrelativistic, 2, 1, 0}, 4}, {{Model::nonrelativistic, 1, 0, 0}, 5}};
  const auto rows = moment_sweep(tasks, c);
  REQUIRE(rows[0].comparison.has_value());
  CHECK(rows[0].comparison->closed_form == hydrogen_moment_closed(HydrogenState(2, 1, 0), c, 4).closed_form);
  CHECK(rows[1].error_kind == std::optional<std::string>("DivergentMoment"));

  const auto states = grid(Model::relativistic);
  const auto e = nu_energy_sweep(states, c.alpha);
  for (std::size_t i = 0; i < states.size(); ++i)
    CHECK(e[i] == doctest::Approx(unperturbed_energy(QuantumNumbers(states[i].n, states[i].l, 0), c)).epsilon(1e-10));
  CHECK(std::isnan(nu_energy_sweep(std::vector<StateSpec>{{Model::relativistic, 0, 0, 0}}, 0.9)[0]));
}
