// One line per acceptance criterion; criterion 10 runs the CLI.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "nckg/verify.hpp"

#ifndef NCKG_CLI_PATH
#error "NCKG_CLI_PATH must name the nckg executable"
#endif

namespace {

void line(int number, bool passed, const std::string& title, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s | %s\n", passed ? "PASS" : "FAIL", number, title.c_str(), detail.c_str());
}

}  // namespace

int main() {
  int failures = 0;
  int number = 0;
  for (const auto& check : nckg::verify::acceptance_checks()) {
    ++number;
    const auto r = nckg::verify::run_check(check);
    char detail[256];
    std::snprintf(detail, sizeof detail, "measured %.3e, tolerance %.1e, %.3f s%s", r.measured, r.tolerance, r.seconds,
                  r.time_limit > 0 ? (" (limit " + std::to_string(static_cast<int>(r.time_limit)) + " s)").c_str() : "");
    line(number, r.passed, r.title, detail);
    for (const auto& n : r.notes) std::printf("             %s\n", n.c_str());
    failures += !r.passed;
  }

  const std::string cmd = std::string("\"") + NCKG_CLI_PATH + "\" verify > /dev/null";
  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool exited_zero = status == 0;
  const bool ok = exited_zero && seconds < 30.0;
  char detail[128];
  std::snprintf(detail, sizeof detail, "exit status %d, %.3f s (limit 30 s)", status, seconds);
  line(++number, ok, "`nckg verify` runs every suite and exits 0", detail);
  failures += !ok;

  std::printf("%d of %d criteria passed\n", number - failures, number);
  return failures == 0 ? 0 : 1;
}
