#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qcomin {

struct Check {
  std::string id;
  std::string title;
  // Returns true on success; may append a description of what was checked or what failed.
  std::function<bool(std::string& detail)> run;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// The numbered acceptance criteria.
std::vector<Check> acceptance_checks();
// Worked examples and tables not covered by a numbered criterion.
std::vector<Check> example_checks();
// Property suites; each must finish within the time limit.
std::vector<Check> property_checks();

// Runs a check, catching exceptions as failures.
CheckResult run_check(const Check& c);
std::string format_result(const CheckResult& r);

}  // namespace qcomin
