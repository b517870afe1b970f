#pragma once

#include <string>
#include <vector>

namespace gammaft::acceptance {

enum class Tier { fast, slow, all };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the verification checklist. Every tolerance is pinned in the
// implementation; `tol_floor > 0` loosens each comparison to
// max(stated tolerance, tol_floor) for diagnostic reruns. Exact-equality
// checks ignore the floor.
std::vector<CheckResult> run(Tier tier, double tol_floor = 0.0);

// Prints one PASS/FAIL line per check to stdout; returns the failure count.
int report(const std::vector<CheckResult>& results);

}  // namespace gammaft::acceptance
