// Serial reference vs OpenMP sweep timings.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nckg/sweep.hpp"

namespace {

template <class Fn>
double best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  using namespace nckg;
  const auto c = PhysicalConstants{}.with_theta(1e-25);
  std::vector<StateSpec> states;
  std::vector<MomentTask> tasks;
  for (int n = 0; n <= 6; ++n)
    for (int l = 0; l <= 5; ++l) {
      for (int m = -l; m <= l; ++m) states.push_back({Model::relativistic, n, l, m});
      for (int k = 4; k <= 6; ++k) tasks.push_back({{Model::relativistic, n, l, 0}, k});
    }
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads %d\n", threads);

  const auto mode = AngularMode::spherical_average_2_3;
  const double s_serial = best_of(5, [&] { spectrum_sweep(states, c, mode, Execution::serial); });
  const double s_par = best_of(5, [&] { spectrum_sweep(states, c, mode, Execution::parallel); });
  std::printf("spectrum  %4zu states  serial %.6f s  parallel %.6f s  speedup %.2f\n", states.size(), s_serial, s_par,
              s_serial / s_par);

  const double m_serial = best_of(3, [&] { moment_sweep(tasks, c, Execution::serial); });
  const double m_par = best_of(3, [&] { moment_sweep(tasks, c, Execution::parallel); });
  std::printf("moments   %4zu tasks   serial %.6f s  parallel %.6f s  speedup %.2f\n", tasks.size(), m_serial, m_par,
              m_serial / m_par);

  const double n_serial = best_of(3, [&] { nu_energy_sweep(states, c.alpha, Execution::serial); });
  const double n_par = best_of(3, [&] { nu_energy_sweep(states, c.alpha, Execution::parallel); });
  std::printf("nu-energy %4zu states  serial %.6f s  parallel %.6f s  speedup %.2f\n", states.size(), n_serial, n_par,
              n_serial / n_par);
  return 0;
}
