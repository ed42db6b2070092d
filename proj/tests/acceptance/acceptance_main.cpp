#include <iostream>

#include "bsts/verify.hpp"

// One PASS/FAIL/SKIPPED line per acceptance criterion; SKIPPED counts as not
// passing.
int main() {
  const auto report = bsts::run_verify_suite(&std::cout);
  return report.all_passed() ? 0 : 1;
}
