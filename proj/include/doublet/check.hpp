#pragma once

#include <string>
#include <vector>

namespace doublet {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline CheckResult make_check(std::string name, double residual, double tolerance) {
  bool ok = residual <= tolerance;
  return CheckResult{std::move(name), residual, tolerance, ok};
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace doublet
