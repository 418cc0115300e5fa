#pragma once

#include <functional>
#include <string>
#include <vector>

namespace nckg::verify {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  double measured = 0.0;    // worst observed discrepancy
  double tolerance = 0.0;
  double seconds = 0.0;
  double time_limit = 0.0;  // 0 = unlimited
  std::vector<std::string> notes;
};

struct Check {
  std::string id;
  std::string title;
  double tolerance = 0.0;
  double time_limit = 0.0;
  /// Fills measured / passed / notes of the result it is handed.
  std::function<void(CheckResult&)> body;
};

/// The numbered acceptance criteria, A1..A9.
std::vector<Check> acceptance_checks();

/// Per-module invariants and properties.
std::vector<Check> invariant_checks();

/// Times the body, turns exceptions into failures, applies the time limit.
CheckResult run_check(const Check& check);

}  // namespace nckg::verify
