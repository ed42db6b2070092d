#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bsts/configuration.hpp"
#include "bsts/point_set.hpp"

namespace bsts {

/// Y1 ⋔ Y2 = (Y1 ∩ Y2) ∪ (S∖Y1 ∩ S∖Y2), with S the full set of the common
/// width. Throws `Error{WidthMismatch}` on unequal widths.
PointSet hipcap(const PointSet& lhs, const PointSet& rhs);

/// A bipartition {A, W∖A} of a base set W.
struct PartitionSpec {
  std::vector<int> ground;  // W, sorted
  std::vector<int> part;    // A ⊆ W, sorted

  std::vector<int> complement_part() const;
  bool is_proper() const noexcept { return !part.empty() && part.size() < ground.size(); }
  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

/// H(A | W∖A) = Sub2(A) ∪ Sub2(W∖A), as a point set of `cfg`.
///
/// Requires the point labels of `cfg` to be exactly the pairs of `spec.ground`
/// (`Error{LabelsNotPairs}` / `Error{NotFullPairSet}` otherwise).
PointSet partition_hyperplane(const Configuration& cfg, const PartitionSpec& spec);

/// Same, with the ground set read off the labels of `cfg`.
PointSet partition_hyperplane(const Configuration& cfg, std::span<const int> part);

/// ⋔-closure of `generators`, without the full set, sorted ascending.
/// Throws `Error{SearchBudgetExceeded}` past `cap` elements.
inline constexpr std::size_t kSubalgebraCap = std::size_t{1} << 25;
std::vector<PointSet> generate_subalgebra(std::span<const PointSet> generators,
                                          std::size_t cap = kSubalgebraCap);

}  // namespace bsts
