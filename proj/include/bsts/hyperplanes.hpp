#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsts/canonical.hpp"
#include "bsts/configuration.hpp"
#include "bsts/point_set.hpp"
#include "bsts/search_budget.hpp"

namespace bsts {

/// All geometric hyperplanes, sorted ascending (PointSet order).
///
/// Depth-first membership assignment with unit propagation over the line
/// constraints "one or three points inside". Throws
/// `Error{SearchBudgetExceeded}` past the node budget.
std::vector<PointSet> enumerate_hyperplanes(const Configuration& cfg, const SearchBudget& budget = {});

/// Filter of `is_hyperplane` over all 2^N subsets, for N <= 24
/// (`Error{InvalidArgument}` above). Used as a test oracle.
std::vector<PointSet> brute_force_hyperplanes(const Configuration& cfg);

/// Hyperplanes with the lines {H1, H2, H1 ⋔ H2}; a PG(dimension, 2).
struct VeldkampSpace {
  std::vector<PointSet> hyperplanes;
  std::vector<std::array<int, 3>> lines;  // sorted index triples, sorted
  int dimension = -1;
};

/// Builds and checks the Veldkamp space of a hyperplane list: closure under
/// ⋔, 2^(d+1) - 1 members and N(N-1)/6 distinct lines. Throws
/// `Error{NotProjective}` when a check fails.
VeldkampSpace veldkamp_space(std::vector<PointSet> hyperplanes);
VeldkampSpace veldkamp_space(const Configuration& cfg, const SearchBudget& budget = {});

struct ComponentGeometry {
  PointSet members;  // in the parent configuration
  std::size_t points = 0;
  std::size_t lines = 0;
  std::optional<BinomialType> binomial;
  GeometrySignature signature;
  std::string tag;  // "B(4,0)" for binomial components, else "P7L3"
};

struct HyperplaneGeometry {
  std::vector<ComponentGeometry> components;  // ordered by size, then tag
  std::string label;                          // tags joined by '+'
};

/// Connected components of the restriction to H under collinearity. A lone
/// point is tagged B(2,0), a bare line B(3,0). Throws `Error{NotAHyperplane}`.
HyperplaneGeometry classify_hyperplane(const Configuration& cfg, const PointSet& h);

/// Veldkamp space with the geometry of every hyperplane.
struct LabeledVeldkamp {
  VeldkampSpace space;
  std::vector<HyperplaneGeometry> geometry;  // parallel to space.hyperplanes

  std::map<std::string, std::size_t> label_counts() const;
  /// "PG(3,2) B(2,0)+B(3,0):10 B(4,0):5"; "PG(-1,2)" when empty.
  std::string summary() const;
};

LabeledVeldkamp labeled_veldkamp(const Configuration& cfg, const SearchBudget& budget = {});

struct HypothesisViolation {
  std::size_t hyperplane = 0;  // index into the enumerated list
  std::string label;
  std::string reason;
};

/// Evidence for the dichotomy on a B(n,0): every hyperplane is either
/// connected of type B(n-1,0), or has exactly two components B(k1,0),
/// B(k2,0) with k1 + k2 = n and k1, k2 >= 2.
///
/// The mutual-complement property of split hyperplanes (each component is
/// exactly the set of points of the whole configuration uncollinear with
/// every point of the other) is reported separately.
struct HypothesisReport {
  bool holds = true;
  int n = 0;
  std::size_t hyperplane_count = 0;
  std::size_t split_count = 0;
  std::vector<HypothesisViolation> counterexamples;
  bool mutual_complement = true;
  std::vector<std::size_t> mutual_complement_failures;
};

/// Throws `Error{NotBinomial}` unless `cfg` is a binomial configuration.
HypothesisReport check_connected_or_split_hypothesis(const Configuration& cfg, const SearchBudget& budget = {});

}  // namespace bsts
