#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bsts/error.hpp"
#include "bsts/point_set.hpp"

namespace bsts {

using Line = std::array<PointIndex, 3>;

// ---------------------------------------------------------------------------
// Point labels

/// 2-subset {x, y} of a base set; stored with x < y.
struct Pair {
  int x = 0;
  int y = 0;
  Pair() = default;
  Pair(int a, int b);
  bool contains(int e) const noexcept { return x == e || y == e; }
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Multiset a^i b^j c^m over a three-letter alphabet.
struct Multiset {
  std::array<int, 3> exponents{};
  int degree() const noexcept { return exponents[0] + exponents[1] + exponents[2]; }
  friend auto operator<=>(const Multiset&, const Multiset&) = default;
};

/// Element (x, i) of a product X × I.
struct Tuple {
  int x = 0;
  int i = 0;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;
};

struct Atom {
  std::string name;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

using PointLabel = std::variant<Atom, Pair, Multiset, Tuple>;

/// Renders `{1,2}`, `a^2b^0c^1`, `(3,1)` or the atom name verbatim.
std::string to_string(const PointLabel& label);

/// Inverse of `to_string`; strings matching none of the structured grammars
/// become atoms.
PointLabel parse_label(std::string_view text);

// ---------------------------------------------------------------------------
// Binomial types

/// Shape B(n, delta): C(n+delta, 2) points, C(n+delta, 3) lines, rank n+delta-2.
struct BinomialType {
  int n = 0;
  int delta = 0;

  int order() const noexcept { return n + delta; }
  long long points() const noexcept;
  long long lines() const noexcept;
  int rank() const noexcept { return order() - 2; }
  BinomialType normalized() const noexcept { return {order(), 0}; }

  // Types compare by shape, so B(4,+1) == B(5,0).
  friend bool operator==(const BinomialType& a, const BinomialType& b) noexcept {
    return a.order() == b.order();
  }
};

std::string to_string(const BinomialType& type);

long long binomial(long long n, long long k) noexcept;

// ---------------------------------------------------------------------------
// Configuration

/// Points are dense indices 0..N-1 carrying labels; lines are sorted index
/// triples, deduplicated and stored in sorted order.
///
/// Construction checks indices and label uniqueness only. The PSTS axioms
/// (line shape, unique joins, uniform rank) are checked by `validate_psts`;
/// constructors in this library always return validated configurations.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::vector<PointLabel> labels, std::vector<Line> lines);

  /// Points labelled by atoms "0", "1", ...
  static Configuration unlabeled(std::size_t points, std::vector<Line> lines);

  std::size_t point_count() const noexcept { return labels_.size(); }
  std::size_t line_count() const noexcept { return lines_.size(); }

  const std::vector<PointLabel>& labels() const noexcept { return labels_; }
  const PointLabel& label(PointIndex p) const { return labels_.at(static_cast<std::size_t>(p)); }
  const std::vector<Line>& lines() const noexcept { return lines_; }
  const Line& line(std::size_t i) const { return lines_.at(i); }

  /// Indices of the lines through `p`.
  std::span<const int> lines_through(PointIndex p) const noexcept {
    return incidence_[static_cast<std::size_t>(p)];
  }
  int rank(PointIndex p) const noexcept {
    return static_cast<int>(incidence_[static_cast<std::size_t>(p)].size());
  }

  /// The unique r with {p, q, r} a line, if p and q are joinable.
  std::optional<PointIndex> third_point(PointIndex p, PointIndex q) const;
  bool collinear(PointIndex p, PointIndex q) const { return third_point(p, q).has_value(); }
  /// Index of the line through p and q, if any.
  std::optional<int> line_on(PointIndex p, PointIndex q) const;

  std::optional<PointIndex> find_label(const PointLabel& label) const;

  PointSet empty_set() const { return PointSet(point_count()); }
  PointSet full_set() const { return PointSet::full(point_count()); }
  PointSet line_set(std::size_t i) const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.labels_ == b.labels_ && a.lines_ == b.lines_;
  }

 private:
  std::vector<PointLabel> labels_;
  std::vector<Line> lines_;
  std::vector<std::vector<int>> incidence_;
  // join_[p * N + q] = index of the line through p and q, or -1.
  std::vector<int> join_;
};

// ---------------------------------------------------------------------------
// Validation

struct ValidationIssue {
  ErrorKind kind;
  std::vector<int> indices;
  std::string message;
};

struct ValidationReport {
  bool is_psts = false;
  int rank = 0;
  std::optional<BinomialType> binomial;  // normalized to delta = 0
  std::optional<ValidationIssue> issue;
};

ValidationReport validate_psts(const Configuration& cfg);

/// Throws `Error` carrying the validation issue when `cfg` is not a PSTS.
ValidationReport require_psts(const Configuration& cfg);

/// Builds and validates in one step.
Configuration make_psts(std::vector<PointLabel> labels, std::vector<Line> lines);

/// Binomial type read off the counts alone (points, lines, uniform rank).
std::optional<BinomialType> binomial_type_of(std::size_t points, std::size_t lines, int rank);

// ---------------------------------------------------------------------------
// Predicates and derived structures

bool is_subspace(const Configuration& cfg, const PointSet& y);
bool is_hyperplane(const Configuration& cfg, const PointSet& h);

/// Smallest subspace containing `y` (closure under third-point completion).
PointSet subspace_closure(const Configuration& cfg, PointSet y);

struct Restriction {
  Configuration cfg;
  std::vector<PointIndex> to_parent;  // child index -> parent index
};

/// The points of `y` with exactly the lines lying inside `y`; labels kept,
/// indices renumbered densely in increasing parent order.
Restriction restrict_to(const Configuration& cfg, const PointSet& y);

/// Points whose Pair label contains `element`.
PointSet star(const Configuration& cfg, int element);

/// Base set underlying Pair labels (sorted), or `Error{LabelsNotPairs}`.
std::vector<int> pair_ground_set(const Configuration& cfg);

/// Relabels points by `perm` (new index of old point p is perm[p]).
Configuration permute(const Configuration& cfg, std::span<const PointIndex> perm);

}  // namespace bsts
