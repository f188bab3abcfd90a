#pragma once

#include <string>
#include <vector>

namespace lpst {

struct CheckResult {
  std::string name;
  std::string measured;
  std::string expected;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool passed() const;
};

// constants, approx, flat, diam3, tristar, convex, caterpillar, bounds,
// localsearch. Each suite drives one acceptance criterion.
const std::vector<std::string>& verify_suite_names();

// Runs a suite. jobs > 1 spreads independent instances over threads; the
// report is identical for any jobs value. Throws PreconditionError for an
// unknown name.
SuiteResult run_verify_suite(const std::string& name, int jobs = 1);

}  // namespace lpst
