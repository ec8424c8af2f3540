#pragma once

#include <string>
#include <vector>

#include "arakelov/numerics_oracle.hpp"

namespace arakelov {

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Runs the built-in verification suite. The quick suite replays the
/// reference examples; `deep` adds the exhaustive identity scans, gauge
/// invariance and quadrature checks, fanned out over worker threads.
/// A check that throws is reported as failed with the exception text.
std::vector<CheckResult> run_checks(bool deep, const oracle::PrecisionBudget& budget = {});

}  // namespace arakelov
