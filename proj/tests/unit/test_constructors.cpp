#include <doctest.h>

#include <numeric>

#include "bsts/configuration.hpp"
#include "bsts/constructors.hpp"
#include "bsts/error.hpp"

using namespace bsts;

namespace {

int order_of(const Configuration& cfg) {
  auto report = validate_psts(cfg);
  REQUIRE(report.is_psts);
  REQUIRE(report.binomial);
  return report.binomial->order();
}

}  // namespace

TEST_CASE("Grassmannians G(n,2)") {
  for (int n = 3; n <= 9; ++n) {
    const auto g = desargues(n);
    CHECK(g.point_count() == static_cast<std::size_t>(binomial(n, 2)));
    CHECK(g.line_count() == static_cast<std::size_t>(binomial(n, 3)));
    CHECK(order_of(g) == n);
  }
  const std::vector<int> base{2, 5, 9, 11};
  const auto g = grassmannian(base);
  CHECK(g.label(static_cast<int>(pair_position(4, 1, 3))) == PointLabel{Pair{5, 11}});
}

TEST_CASE("quasi-Grassmannians are B(n,0)") {
  for (int n = 4; n <= 10; ++n) CHECK(order_of(quasi_grassmannian(n)) == n);
  CHECK_THROWS_AS(quasi_grassmannian(3), Error);
  const auto r6 = quasi_grassmannian(6);
  const auto p12 = *r6.find_label(Pair{1, 2});
  const auto p14 = *r6.find_label(Pair{1, 4});
  CHECK(r6.third_point(p12, p14) == r6.find_label(Pair{2, 3}));
}

TEST_CASE("Veronesians V(3,k)") {
  for (int k = 1; k <= 6; ++k) {
    const auto v = veronesian(k);
    CHECK(v.point_count() == static_cast<std::size_t>(binomial(k + 2, 2)));
    CHECK(order_of(v) == k + 2);
  }
  const auto v2 = veronesian(2);
  CHECK(v2.find_label(Multiset{{1, 1, 0}}).has_value());
}

TEST_CASE("multi-veblen and dual Veronesians") {
  const std::vector<int> x{1, 2, 3, 4};
  for (const auto& graph : {GraphOnX::empty(x), GraphOnX::complete(x), GraphOnX{x, {Pair{1, 2}, Pair{3, 4}}}}) {
    const auto m = multi_veblen(graph);
    CHECK(m.point_count() == 15);
    CHECK(order_of(m) == 6);
  }
  CHECK_THROWS_AS(multi_veblen(GraphOnX::empty(x), {3, 7}), Error);
  CHECK(order_of(dual_veronesian(5)) == 7);
}

TEST_CASE("systems of perspectives") {
  for (int m = 1; m <= 4; ++m) {
    const auto data = tetrahedra_data(m);
    CHECK(data.order() == m + 3);
    CHECK(order_of(perspective_system(data)) == m + 4);
  }
  for (int n = 4; n <= 9; ++n)
    CHECK(perspective_system(quasi_grassmannian_data(n)) == quasi_grassmannian(n));
  for (int k = 3; k <= 5; ++k)
    CHECK(order_of(perspective_system(veronesian_data(k))) == k + 2);

  auto bad = tetrahedra_data(2);
  bad.xi[0][0] = {1, 0, 2, 3};
  CHECK_THROWS_AS(check_perspective_data(bad), Error);
  auto bad_mu = tetrahedra_data(2);
  bad_mu.mu[1][0] = bad_mu.mu[1][1];
  CHECK_THROWS_AS(perspective_system(bad_mu), Error);
}

TEST_CASE("graph sum of K_4 and a Veblen core is a B(5,0)") {
  const auto core = desargues(4);
  std::vector<PointIndex> mu(core.point_count());
  std::iota(mu.begin(), mu.end(), 0);
  const auto s = graph_sum(4, core, mu);
  CHECK(order_of(s) == 5);
  CHECK(s.find_label(Pair{0, 3}).has_value());
}
