#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "bsts/configuration.hpp"
#include "bsts/constructors.hpp"
#include "bsts/error.hpp"
#include "bsts/hyperplanes.hpp"
#include "bsts/partition.hpp"
#include "bsts/subgraphs.hpp"

using namespace bsts;

namespace {

PointSet pairs(const Configuration& cfg, std::initializer_list<std::pair<int, int>> list) {
  PointSet s = cfg.empty_set();
  for (auto [x, y] : list) s.insert(*cfg.find_label(Pair{x, y}));
  return s;
}

}  // namespace

TEST_CASE("stars of G(n,2) are the free complete graphs") {
  const auto g = desargues(5);
  const auto s1 = star(g, 1);
  const auto witness = is_freely_contained(g, s1);
  REQUIRE(witness);
  CHECK(witness->pair_lines.size() == 6);
  const auto found = find_free_complete_graphs(g, 4);
  CHECK(found.size() == 5);
  for (int x = 1; x <= 5; ++x) {
    const auto sx = star(g, x);
    CHECK(std::any_of(found.begin(), found.end(), [&](const FreeGraphWitness& w) { return w.vertices == sx; }));
  }
  CHECK(maximal_free_graph_size(g) == 4);
}

TEST_CASE("each freeness clause is diagnosed") {
  const auto g = desargues(5);
  CHECK(check_freely_contained(g, pairs(g, {{1, 2}})).violated == FreeGraphClause::TooSmall);
  CHECK(check_freely_contained(g, pairs(g, {{1, 2}, {3, 4}})).violated == FreeGraphClause::NotJoinable);
  CHECK(check_freely_contained(g, pairs(g, {{1, 2}, {1, 3}, {2, 3}})).violated == FreeGraphClause::CollinearTriple);
  // In the Fano plane opposite sides of a quadrangle meet in a diagonal point.
  const auto fano = make_psts({Atom{"0"}, Atom{"1"}, Atom{"2"}, Atom{"3"}, Atom{"4"}, Atom{"5"}, Atom{"6"}},
                              {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {0, 4, 5}, {1, 5, 6}, {0, 2, 6}});
  const auto overlap = check_freely_contained(fano, PointSet::of(7, {2, 4, 5, 6}));
  CHECK(overlap.violated == FreeGraphClause::OverlappingLines);
  CHECK_FALSE(overlap.diagnostic.empty());
  CHECK(check_freely_contained(g, pairs(g, {{1, 2}, {1, 3}})).witness.has_value());
}

TEST_CASE("graph complement of a star in G(n,2) is G(n-1,2)") {
  for (int n = 4; n <= 7; ++n) {
    const auto g = desargues(n);
    const auto w = *is_freely_contained(g, star(g, n));
    const auto rest = graph_complement(g, w);
    CHECK(validate_psts(rest.cfg).binomial == BinomialType{n - 1, 0});
    for (auto p : rest.to_parent) CHECK_FALSE(w.vertices.contains(p));
  }
  const auto g = desargues(5);
  const auto small = *is_freely_contained(g, pairs(g, {{1, 2}, {1, 3}}));
  CHECK_THROWS_AS(graph_complement(g, small), Error);
}

TEST_CASE("pairwise intersections of the stars") {
  const auto g = desargues(6);
  const auto found = find_free_complete_graphs(g, 5);
  REQUIRE(found.size() == 6);
  const auto report = pairwise_intersections(g, found);
  CHECK(report.ok);
  CHECK(report.common[0][1].size() == 1);
  CHECK(report.violations.empty());
}

TEST_CASE("decomposition of partition hyperplanes") {
  const auto g = desargues(5);
  const auto h = pairs(g, {{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(decompose_hyperplane(g, h).part == std::vector<int>{1});
  const auto h12 = partition_hyperplane(g, std::vector<int>{3, 4, 5});
  CHECK(decompose_hyperplane(g, h12).part == std::vector<int>{1, 2});
  const auto g4 = desargues(4);
  const auto tie = partition_hyperplane(g4, std::vector<int>{1, 2});
  CHECK(decompose_hyperplane(g4, tie).part == std::vector<int>{3, 4});
  CHECK_THROWS_AS(decompose_hyperplane(g, g.empty_set()), Error);

  const auto core = desargues(4);
  std::vector<PointIndex> mu(core.point_count());
  std::iota(mu.begin(), mu.end(), 0);
  const auto sum = graph_sum(4, core, mu);
  PointSet inner = sum.empty_set();
  for (int x = 1; x <= 4; ++x)
    for (int y = x + 1; y <= 4; ++y) inner.insert(*sum.find_label(Pair{x, y}));
  REQUIRE(is_hyperplane(sum, inner));
  CHECK(decompose_hyperplane(sum, inner).part == std::vector<int>{0});
}

TEST_CASE("every hyperplane of a partition-form family decomposes") {
  for (const auto& cfg : {desargues(6), quasi_grassmannian(7), perspective_system(tetrahedra_data(3))}) {
    for (const auto& h : enumerate_hyperplanes(cfg)) {
      const auto spec = decompose_hyperplane(cfg, h);
      CHECK(partition_hyperplane(cfg, spec) == h);
    }
  }
}

TEST_CASE("degeneracy of systems of perspectives") {
  for (int m = 2; m <= 3; ++m) {
    const auto report = check_degeneracy(tetrahedra_data(m));
    CHECK(report.fixed_points.empty());
    CHECK_FALSE(report.extra_graphs);
    CHECK(report.free_graph_count == static_cast<std::size_t>(m));
    CHECK(report.consistent);
  }
  auto trivial = tetrahedra_data(2);
  for (auto& row : trivial.xi)
    for (auto& perm : row) perm = {0, 1, 2, 3};
  const auto t = check_degeneracy(trivial);
  CHECK(t.fixed_points.size() == 4);
  CHECK(t.extra_graphs);
  CHECK(t.free_graph_count >= 3);
  for (int n : {6, 8}) {
    const auto r = check_degeneracy(quasi_grassmannian_data(n));
    CHECK(r.fixed_points.empty());
    CHECK(r.free_graph_count == 2);
  }
}

TEST_CASE("V(3,4): a fixed point of xi without extra free graphs") {
  // xi(s) = k - s fixes k/2 when k is even, yet V(3,4) holds exactly three K_5.
  const auto report = check_degeneracy(veronesian_data(4));
  CHECK(report.fixed_points == std::vector<int>{2});
  CHECK(report.free_graph_count == 3);
  CHECK_FALSE(report.consistent);
}

TEST_CASE("partition criteria on two tetrahedra") {
  const auto data = tetrahedra_data(2);
  const auto pass = check_partition_criteria(data, std::vector<int>{1, 2});
  CHECK(pass.hyperplane);
  CHECK(pass.agrees());
  const auto fail = check_partition_criteria(data, std::vector<int>{1});
  CHECK_FALSE(fail.hyperplane);
  CHECK(fail.agrees());
  CHECK(std::find(fail.failed.begin(), fail.failed.end(), PartitionCriterion::XiInvariant) != fail.failed.end());
  CHECK(check_partition_criteria(data, std::vector<int>{1, 2, 3, 4}).hyperplane);
  CHECK(to_string(PartitionCriterion::MuInvariant) == "iii");
}

TEST_CASE("partition criteria agree with direct checks on every subset") {
  for (const auto& data : {tetrahedra_data(3), quasi_grassmannian_data(7), veronesian_data(3)}) {
    const auto built = perspective_system(data);
    const std::size_t nx = data.base.size();
    for (unsigned mask = 0; mask < (1u << nx); ++mask) {
      std::vector<int> a;
      for (std::size_t i = 0; i < nx; ++i)
        if ((mask >> i) & 1u) a.push_back(data.base[i]);
      CHECK(check_partition_criteria(data, built, a).agrees());
    }
  }
}
