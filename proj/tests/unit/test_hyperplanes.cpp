#include <doctest.h>

#include <algorithm>
#include <random>

#include "bsts/catalog.hpp"
#include "bsts/configuration.hpp"
#include "bsts/constructors.hpp"
#include "bsts/error.hpp"
#include "bsts/hyperplanes.hpp"
#include "bsts/partition.hpp"
#include "bsts/subgraphs.hpp"

using namespace bsts;

namespace {

// Complements of hyperplanes are the nonzero vectors meeting every line in an
// even number of points: the kernel of the line-point incidence matrix over
// GF(2). So the count is 2^nullity - 1.
std::size_t gf2_hyperplane_count(const Configuration& cfg) {
  const std::size_t n = cfg.point_count();
  std::vector<std::vector<bool>> rows;
  for (const auto& line : cfg.lines()) {
    std::vector<bool> row(n);
    for (int p : line) row[static_cast<std::size_t>(p)] = true;
    rows.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(), [&](auto& r) { return r[col]; });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][col])
        for (std::size_t c = 0; c < n; ++c) rows[r][c] = rows[r][c] != rows[rank][c];
    ++rank;
  }
  return (std::size_t{1} << (n - rank)) - 1;
}

}  // namespace

TEST_CASE("enumeration matches brute force on small configurations") {
  std::vector<Configuration> configs{desargues(4), desargues(5), desargues(6), veronesian(3), quasi_grassmannian(5),
                                     quasi_grassmannian(6), dual_veronesian(4), Configuration::unlabeled(3, {{0, 1, 2}})};
  for (const auto& e : catalog_103_unverified()) configs.push_back(e.cfg);
  for (const auto& cfg : configs) CHECK(enumerate_hyperplanes(cfg) == brute_force_hyperplanes(cfg));
}

TEST_CASE("hyperplane counts agree with the GF(2) nullity") {
  std::vector<Configuration> configs{desargues(7), desargues(8), veronesian(4), veronesian(5), dual_veronesian(5),
                                     perspective_system(tetrahedra_data(3))};
  for (int n = 4; n <= 10; ++n) configs.push_back(quasi_grassmannian(n));
  for (const auto& cfg : configs) {
    const auto hyps = enumerate_hyperplanes(cfg);
    CHECK(hyps.size() == gf2_hyperplane_count(cfg));
    for (const auto& h : hyps) CHECK(is_hyperplane(cfg, h));
  }
}

TEST_CASE("known counts") {
  CHECK(enumerate_hyperplanes(desargues(5)).size() == 15);
  CHECK(enumerate_hyperplanes(veronesian(3)).size() == 7);
  const auto line = Configuration::unlabeled(3, {{0, 1, 2}});
  const auto hyps = enumerate_hyperplanes(line);
  REQUIRE(hyps.size() == 3);
  for (const auto& h : hyps) CHECK(h.count() == 1);
  // Without lines every proper subset qualifies.
  CHECK(enumerate_hyperplanes(Configuration::unlabeled(3, {})).size() == 7);
}

TEST_CASE("quasi-Grassmannians: odd orders are exactly the template sets") {
  for (int n : {5, 7, 9}) {
    const auto r = quasi_grassmannian(n);
    const int k = (n - 1) / 2;
    const auto hyps = enumerate_hyperplanes(r);
    CHECK(hyps.size() == (std::size_t{1} << (k + 1)) - 1);
    for (const auto& h : hyps) CHECK_NOTHROW(decompose_hyperplane(r, h));
  }
}

TEST_CASE("quasi-Grassmannians: even orders carry hyperplanes outside the template") {
  // Independent oracles (brute force, nullity) give 2^(k+1) - 1 for R_2k.
  const auto r6 = quasi_grassmannian(6);
  CHECK(brute_force_hyperplanes(r6).size() == 15);
  CHECK(gf2_hyperplane_count(quasi_grassmannian(8)) == 31);
  PointSet twisted = r6.empty_set();
  for (auto [x, y] : {std::pair{1, 2}, {1, 4}, {1, 6}, {2, 3}, {2, 5}, {3, 5}, {4, 6}})
    twisted.insert(*r6.find_label(Pair{x, y}));
  CHECK(is_hyperplane(r6, twisted));
  CHECK_THROWS_AS(decompose_hyperplane(r6, twisted), Error);
}

TEST_CASE("Veldkamp spaces are projective") {
  const auto vs = veldkamp_space(desargues(5));
  CHECK(vs.dimension == 3);
  CHECK(vs.lines.size() == 35);
  CHECK(veldkamp_space(Configuration::unlabeled(3, {{0, 1, 2}})).dimension == 1);
  CHECK(veldkamp_space(std::vector<PointSet>{}).dimension == -1);
  const auto g = desargues(5);
  auto hyps = enumerate_hyperplanes(g);
  hyps.pop_back();
  CHECK_THROWS_AS(veldkamp_space(hyps), Error);
}

TEST_CASE("hyperplane geometry labels") {
  const auto g = desargues(5);
  const auto star_like = partition_hyperplane(g, std::vector<int>{1});
  CHECK(classify_hyperplane(g, star_like).label == "B(4,0)");
  const auto split = partition_hyperplane(g, std::vector<int>{1, 2});
  CHECK(classify_hyperplane(g, split).label == "B(2,0)+B(3,0)");
  CHECK_THROWS_AS(classify_hyperplane(g, g.empty_set()), Error);
  CHECK(labeled_veldkamp(g).summary() == "PG(3,2) B(2,0)+B(3,0):10 B(4,0):5");
  for (const auto& e : catalog_103_unverified()) {
    if (e.name == "basinet") CHECK(labeled_veldkamp(e.cfg).summary() == "PG(0,2) B(4,0):1");
    if (e.name == "overseas-cap") CHECK(labeled_veldkamp(e.cfg).summary() == "PG(0,2) B(2,0)+B(3,0):1");
  }
}

TEST_CASE("connected-or-split dichotomy") {
  for (int n = 4; n <= 7; ++n) {
    const auto report = check_connected_or_split_hypothesis(desargues(n));
    CHECK(report.holds);
    CHECK(report.mutual_complement);
    CHECK(report.hyperplane_count == (std::size_t{1} << (n - 1)) - 1);
  }
  const auto r6 = check_connected_or_split_hypothesis(quasi_grassmannian(6));
  CHECK_FALSE(r6.holds);
  CHECK_FALSE(r6.counterexamples.empty());
  CHECK_THROWS_AS(check_connected_or_split_hypothesis(Configuration::unlabeled(3, {})), Error);
}

TEST_CASE("budget overrun is reported") {
  SearchBudget tiny{5};
  try {
    enumerate_hyperplanes(desargues(7), tiny);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchBudgetExceeded);
  }
}
