#pragma once

#include <string>
#include <vector>

namespace cyclespec {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // worst deviation / counts, for the report table
};

/// Runs the cross-module invariant suite up to symmetric-group degree n_max
/// (each check additionally clamps n to its own feasible range).  Fully
/// deterministic: fixed seeds, exact arithmetic where available.
std::vector<CheckResult> run_invariant_suite(int n_max);

}  // namespace cyclespec
