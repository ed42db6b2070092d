#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsts/canonical.hpp"
#include "bsts/configuration.hpp"
#include "bsts/search_budget.hpp"

namespace bsts {

/// Certificate plus summary counts (hyperplanes, maximal free graphs).
GeometrySignature canonical_form(const Configuration& cfg, const SearchBudget& budget = {});

struct CensusClass {
  GeometrySignature signature;
  Configuration representative;  // canonically numbered
};

struct CensusResult {
  std::vector<CensusClass> classes;  // ascending certificate
  std::uint64_t completions = 0;     // labelled line systems reached
  std::uint64_t nodes = 0;
};

/// All B(n,0) configurations up to isomorphism, for 2 <= n <= 6.
///
/// The lines through point 0 are fixed to {0,1,2}, {0,3,4}, ...; the search
/// then repeatedly completes the smallest point still short of rank n-2.
/// Completions are merged by certificate. Throws
/// `Error{SearchBudgetExceeded}` past the node budget (n = 6 is far beyond
/// the default one) and `Error{BadSize}` outside the range.
CensusResult generate_all_binomial(int n, const SearchBudget& budget = {});

/// Number of 6-point subsets spanning a Veblen configuration (4 lines, each
/// point on two of them).
std::size_t veblen_count(const Configuration& cfg);

struct CatalogExpectation {
  std::size_t hyperplane_count = 0;
  std::size_t veblen_count = 0;
  std::size_t free_k4_count = 0;
  std::string labeled_veldkamp_summary;
  friend bool operator==(const CatalogExpectation&, const CatalogExpectation&) = default;
};

struct CatalogEntry {
  std::string name;
  Configuration cfg;
  CatalogExpectation expected;
};

CatalogExpectation compute_expectation(const Configuration& cfg, const SearchBudget& budget = {});

/// Throws `Error{FixtureMismatch}` naming the entry and field when the stored
/// expectation differs from a recomputation.
void verify_entry(const CatalogEntry& entry, const SearchBudget& budget = {});

/// The ten 10_3 configurations, each verified on load.
std::vector<CatalogEntry> catalog_103();

/// Same entries without the load-time recomputation.
std::vector<CatalogEntry> catalog_103_unverified();

}  // namespace bsts
