#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bsts/configuration.hpp"
#include "bsts/constructors.hpp"
#include "bsts/partition.hpp"
#include "bsts/point_set.hpp"
#include "bsts/search_budget.hpp"

namespace bsts {

/// A freely contained complete graph K_X: every vertex pair is joinable, no
/// three vertices are collinear, and disjoint pairs have disjoint lines.
struct FreeGraphWitness {
  PointSet vertices;
  std::map<std::pair<PointIndex, PointIndex>, int> pair_lines;  // (a < b) -> line index

  std::vector<PointIndex> members() const { return vertices.members(); }
};

enum class FreeGraphClause { TooSmall, NotJoinable, CollinearTriple, OverlappingLines };

std::string_view to_string(FreeGraphClause clause) noexcept;

struct FreeGraphCheck {
  std::optional<FreeGraphWitness> witness;
  std::optional<FreeGraphClause> violated;
  std::vector<PointIndex> culprits;
  std::string diagnostic;
};

FreeGraphCheck check_freely_contained(const Configuration& cfg, const PointSet& x);
std::optional<FreeGraphWitness> is_freely_contained(const Configuration& cfg, const PointSet& x);

/// Every vertex set of the given size that is freely contained, in ascending
/// PointSet order. Clique search over the collinearity graph.
std::vector<FreeGraphWitness> find_free_complete_graphs(const Configuration& cfg, int size,
                                                        const SearchBudget& budget = {});

/// Order - 1 for a binomial configuration, else the largest size of a freely
/// contained complete graph (0 when there is none of size 2).
int maximal_free_graph_size(const Configuration& cfg, const SearchBudget& budget = {});

struct GraphComplement {
  Configuration cfg;
  std::vector<PointIndex> to_parent;
};

/// S∖X with the lines meeting X removed; a B(n,0) when `cfg` is a B(n,+1)
/// and |X| = n. Throws `Error{NotBinomialPlusOne}` otherwise.
GraphComplement graph_complement(const Configuration& cfg, const FreeGraphWitness& x);

struct IntersectionReport {
  bool ok = true;
  std::vector<std::string> violations;
  // common[i][j]: the shared vertices of witnesses i and j
  std::vector<std::vector<std::vector<PointIndex>>> common;
};

/// Pairwise intersections must be single vertices, and the three common
/// vertices of any three graphs must form a line.
IntersectionReport pairwise_intersections(const Configuration& cfg, std::span<const FreeGraphWitness> witnesses);

/// The A ⊆ W with H = H(A|W∖A), W the pair ground set of `cfg`. Of the two
/// sides the smaller one is returned; on a tie, the side without min W.
/// Throws `Error{NotAHyperplane}` or `Error{NoDecomposition}`.
PartitionSpec decompose_hyperplane(const Configuration& cfg, const PointSet& h);

struct DegeneracyReport {
  std::vector<int> fixed_points;   // x in X fixed by every xi(i,j)
  bool extra_graphs = false;       // predicted: more than m free K_n
  std::size_t free_graph_count = 0;
  int free_graph_size = 0;
  bool consistent = true;          // prediction matches the count
};

DegeneracyReport check_degeneracy(const PerspectiveData& data, const SearchBudget& budget = {});

enum class PartitionCriterion { Axis, XiInvariant, MuInvariant };

std::string_view to_string(PartitionCriterion criterion) noexcept;

struct CriteriaVerdict {
  bool hyperplane = false;                 // all three conditions hold
  std::vector<PartitionCriterion> failed;  // in order (i), (ii), (iii)
  bool direct = false;                     // is_hyperplane on the built system
  bool agrees() const noexcept { return hyperplane == direct; }
};

/// The three conditions for H(A|W∖A), A ⊆ X, to be a hyperplane of the
/// system. Condition (i) reads "H(A|X∖A) restricted to the axis is a
/// hyperplane of the axis", with A = X accepted since H(X|I) is always a
/// hyperplane. Without native Pair labels on the axis, condition (iii)
/// compares every mu_i with the coimage under mu_0.
CriteriaVerdict check_partition_criteria(const PerspectiveData& data, std::span<const int> a);
CriteriaVerdict check_partition_criteria(const PerspectiveData& data, const Configuration& built,
                                         std::span<const int> a);

}  // namespace bsts
