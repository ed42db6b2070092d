#include <doctest.h>

#include "bsts/configuration.hpp"
#include "bsts/constructors.hpp"
#include "bsts/error.hpp"

using namespace bsts;

namespace {

ErrorKind issue_kind(std::size_t points, std::vector<Line> lines) {
  auto report = validate_psts(Configuration::unlabeled(points, std::move(lines)));
  REQUIRE(report.issue.has_value());
  CHECK_FALSE(report.is_psts);
  return report.issue->kind;
}

}  // namespace

TEST_CASE("validation names the broken axiom") {
  CHECK(issue_kind(4, {{0, 1, 1}}) == ErrorKind::BadLineSize);
  CHECK(issue_kind(5, {{0, 1, 2}, {0, 1, 3}}) == ErrorKind::DuplicatePair);
  CHECK(issue_kind(5, {{0, 1, 2}}) == ErrorKind::NonUniformRank);
  CHECK_THROWS_AS(Configuration::unlabeled(3, {{0, 1, 3}}), Error);
  CHECK_THROWS_AS(Configuration({Atom{"a"}, Atom{"a"}}, {}), Error);
  try {
    require_psts(Configuration::unlabeled(5, {{0, 1, 2}, {0, 1, 3}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicatePair);
  }
}

TEST_CASE("single line is a B(3,0)") {
  auto report = validate_psts(Configuration::unlabeled(3, {{0, 1, 2}}));
  CHECK(report.is_psts);
  CHECK(report.rank == 1);
  REQUIRE(report.binomial);
  CHECK(report.binomial->order() == 3);
}

TEST_CASE("binomial type arithmetic") {
  BinomialType t{4, 1};
  CHECK(t.points() == 10);
  CHECK(t.lines() == 10);
  CHECK(t.rank() == 3);
  CHECK(t == BinomialType{5, 0});
  CHECK(to_string(BinomialType{5, 0}) == "B(5,0)");
  CHECK(binomial_type_of(15, 20, 4) == BinomialType{6, 0});
  CHECK_FALSE(binomial_type_of(10, 10, 2).has_value());
}

TEST_CASE("labels round-trip through text") {
  for (const PointLabel& label :
       {PointLabel{Pair{1, 7}}, PointLabel{Multiset{{2, 0, 1}}}, PointLabel{Tuple{3, 1}}, PointLabel{Atom{"p"}}}) {
    CHECK(parse_label(to_string(label)) == label);
  }
  CHECK(to_string(PointLabel{Pair{7, 1}}) == "{1,7}");
}

TEST_CASE("subspaces, closure and restriction on G(5,2)") {
  const auto g = desargues(5);
  const auto s1 = star(g, 1);
  CHECK(s1.count() == 4);
  CHECK_FALSE(is_subspace(g, s1));
  const auto closure = subspace_closure(g, s1);
  CHECK(closure.is_full());
  const auto sub = [&] {
    PointSet s = g.empty_set();
    for (auto [x, y] : {std::pair{2, 3}, {2, 4}, {3, 4}}) s.insert(*g.find_label(Pair{x, y}));
    return s;
  }();
  CHECK(is_subspace(g, sub));
  auto r = restrict_to(g, sub);
  CHECK(r.cfg.point_count() == 3);
  CHECK(r.cfg.line_count() == 1);
  CHECK(pair_ground_set(g) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK_THROWS_AS(pair_ground_set(veronesian(2)), Error);
}

TEST_CASE("third point and permutation") {
  const auto g = desargues(4);
  const auto p = *g.find_label(Pair{1, 2});
  const auto q = *g.find_label(Pair{1, 3});
  CHECK(g.third_point(p, q) == g.find_label(Pair{2, 3}));
  CHECK_FALSE(g.collinear(p, *g.find_label(Pair{3, 4})));
  std::vector<PointIndex> perm{5, 4, 3, 2, 1, 0};
  auto h = permute(g, perm);
  CHECK(h.line_count() == g.line_count());
  CHECK(validate_psts(h).is_psts);
}
