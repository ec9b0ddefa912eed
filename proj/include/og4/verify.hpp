#pragma once

#include <string>
#include <vector>

namespace og4 {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double ms = 0.0;
};

/// Names of the verification suites, in run order.
std::vector<std::string> verify_suite_names();
bool is_verify_suite(const std::string& name);

/// Run one named suite. Internal check failures are reported as a failed
/// result, never swallowed. Throws only on an unknown suite name.
CriterionResult run_verify_suite(const std::string& name);

}  // namespace og4
