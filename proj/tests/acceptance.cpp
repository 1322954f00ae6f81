// Runs the numbered acceptance criteria and prints one line per criterion.

#include <iomanip>
#include <iostream>

#include "qcomin/verify.hpp"

int main() {
  int failed = 0;
  std::cout << std::fixed << std::setprecision(3);
  for (const auto& check : qcomin::acceptance_checks()) {
    qcomin::CheckResult r = qcomin::run_check(check);
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " (" << r.seconds
              << " s)";
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << std::endl;
    failed += !r.pass;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
