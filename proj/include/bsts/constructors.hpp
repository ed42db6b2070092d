#pragma once

#include <array>
#include <span>
#include <vector>

#include "bsts/configuration.hpp"

namespace bsts {

/// Position of the pair {base[a], base[b]} (a < b) in the lexicographic
/// listing of Sub2(base).
std::size_t pair_position(std::size_t base_size, std::size_t a, std::size_t b);

/// G(base, 2): points Sub2(base), lines Sub2(Z) for every 3-subset Z.
Configuration grassmannian(std::span<const int> base);

/// G(n, 2) over {1..n}. n = 4 is the Veblen configuration, n = 5 Desargues.
Configuration desargues(int n);

/// Quasi Grassmannian R_n over X0 ∪ Y, X0 = {1,2} (n even) or {0,1,2}
/// (n odd), Y = {3..2k}: the lines through {1,2} are replaced by the crossed
/// triples {{1,2},{1,2j+2},{2,2j+1}}, {{1,2},{1,2j+1},{2,2j+2}}.
/// Throws `Error{BadSize}` for n < 4.
Configuration quasi_grassmannian(int n);

/// Simple undirected graph on a vertex set X.
struct GraphOnX {
  std::vector<int> vertices;
  std::vector<Pair> edges;

  bool has_edge(int a, int b) const;
  static GraphOnX empty(std::span<const int> vertices);
  static GraphOnX complete(std::span<const int> vertices);
};

/// Multi-veblen configuration M(X, p, P) on Sub2(X ∪ p), a B(|X|, +2).
/// Throws `Error{OverlapError}` when p meets X.
Configuration multi_veblen(const GraphOnX& graph, std::array<int, 2> p);
/// Same with p = {max X + 1, max X + 2}.
Configuration multi_veblen(const GraphOnX& graph);

/// Combinatorial Veronesian V(3, k): points a^i b^j c^m with i + j + m = k,
/// lines {e·a^i, e·b^i, e·c^i} for |e| = k - i, i >= 1.
Configuration veronesian(int k);

/// Dual Veronesian V*(n, 3) = M({1..n}, p, empty graph).
Configuration dual_veronesian(int n);

/// K_X +^mu V with X = {1..n}, presented on Sub2({0..n}): x is {0,x} and the
/// core point mu[pair_position(x, y)] becomes {x,y}.
Configuration graph_sum(int n, const Configuration& core, std::span<const PointIndex> mu);

// ---------------------------------------------------------------------------
// Systems of perspectives m ⋈ B

/// Data (I, X, B, mu, xi) of a system of perspectives.
///
/// Elements of I and X are base-set integers (disjoint). The axis B has
/// C(|X|, 2) points; `mu[i][pair_position(a, b)]` is the axis point attached
/// to the pair {X[a], X[b]} in the i-th simplex, and `xi[i][j][a]` is the
/// position in X of xi(I[i], I[j])(X[a]).
///
/// When the axis points carry Pair labels over X those labels identify B
/// with Sub2(X); otherwise B is read as its coimage under mu[0].
struct PerspectiveData {
  std::vector<int> indices;  // I
  std::vector<int> base;     // X
  Configuration axis;        // B
  std::vector<std::vector<PointIndex>> mu;
  std::vector<std::vector<std::vector<int>>> xi;

  std::size_t m() const noexcept { return indices.size(); }
  /// Parameter n of the resulting B(n, +1).
  int order() const noexcept { return static_cast<int>(base.size() + indices.size()) - 1; }
};

/// Throws `Error{InvariantViolation}` if xi(i,i) != id, xi(i,j) != xi(j,i)^-1,
/// some mu_i is not a bijection, or the sets/axis are malformed.
void check_perspective_data(const PerspectiveData& data);

/// Pair over X attached to each axis point: the native label, or the preimage
/// under mu[0].
std::vector<Pair> axis_pair_labels(const PerspectiveData& data);

/// m ⋈ B on Sub2(X ∪ I). Validates the data first, then requires the result
/// to be a B(n, +1) (`Error{ValidationFailed}` otherwise).
Configuration perspective_system(const PerspectiveData& data);

/// Perspectives of m tetrahedra: X = {1,2,3,4} (a, a', b, b'), I = {5..m+4},
/// B = G(X, 2), mu_i = id, xi(i, j) = (1 2)(3 4) for i != j.
PerspectiveData tetrahedra_data(int m);

/// R_n as a system of perspectives over G(Y, 2), I = X0.
PerspectiveData quasi_grassmannian_data(int n);

/// V(3, k), k >= 3, as 3 ⋈ (abc·V(3, k-3)) with simplices indexed by the
/// letters. I = {k, k+1, k+2} stand for a, b, c; X = {1..k-1}.
PerspectiveData veronesian_data(int k);

}  // namespace bsts
