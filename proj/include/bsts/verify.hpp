#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bsts/configuration.hpp"

namespace bsts {

enum class Outcome { Pass, Fail, Skipped };

std::string_view to_string(Outcome outcome) noexcept;

struct CriterionResult {
  int id = 0;
  std::string title;
  Outcome outcome = Outcome::Fail;
  std::string detail;  // computed vs expected values
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CriterionResult> results;

  bool all_passed() const;
  bool any_failed() const;
};

/// "PASS  3 quasi-Grassmannians: ... (0.41 s)"
std::string render(const CriterionResult& result);

/// Runs the acceptance criteria (all of them when `only` is empty), printing
/// one line per criterion to `log` as it finishes. Search budget overruns
/// are reported as SKIPPED with the reason; other errors as FAIL.
VerifyReport run_verify_suite(std::ostream* log = nullptr, const std::vector<int>& only = {});

struct NamedConfiguration {
  std::string name;
  Configuration cfg;
};

/// Instances of the constructed families with at most `max_points` points:
/// G(n,2), R_n, V(3,k), dual Veronesians, multi-veblen spaces over the empty
/// and complete graphs, tetrahedra systems.
std::vector<NamedConfiguration> family_instances(std::size_t max_points);

}  // namespace bsts
