#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bsts/error.hpp"
#include "bsts/point_set.hpp"

using bsts::PointSet;

TEST_CASE("membership and counting across word boundaries") {
  PointSet s(130);
  CHECK(s.empty());
  for (int p : {0, 63, 64, 127, 129}) s.insert(p);
  CHECK(s.count() == 5);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(65));
  s.erase(64);
  CHECK(s.members() == std::vector<int>{0, 63, 127, 129});
  CHECK(PointSet::full(130).count() == 130);
  CHECK(PointSet::full(130).is_full());
  CHECK(s.complement().count() == 126);
  CHECK((s.complement() | s).is_full());
}

TEST_CASE("set algebra agrees with std::set on random inputs") {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t width = 1 + rng() % 150;
    std::set<int> a, b;
    PointSet sa(width), sb(width);
    for (std::size_t p = 0; p < width; ++p) {
      if (rng() % 2) { a.insert(static_cast<int>(p)); sa.insert(static_cast<int>(p)); }
      if (rng() % 3 == 0) { b.insert(static_cast<int>(p)); sb.insert(static_cast<int>(p)); }
    }
    std::vector<int> inter, uni, sym;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sym));
    CHECK((sa & sb).members() == inter);
    CHECK((sa | sb).members() == uni);
    CHECK((sa ^ sb).members() == sym);
    CHECK((sa & sb).is_subset_of(sa));
    CHECK(sa.complement().complement() == sa);
    CHECK(sa.complement().count() == width - a.size());
  }
}

TEST_CASE("ordering is lexicographic on the bit string") {
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    const std::size_t width = 1 + rng() % 90;
    PointSet x(width), y(width);
    for (std::size_t p = 0; p < width; ++p) {
      x.set(static_cast<int>(p), rng() % 2);
      y.set(static_cast<int>(p), rng() % 2);
    }
    const auto bx = x.to_bit_string();
    const auto by = y.to_bit_string();
    CHECK(((x <=> y) < 0) == (bx < by));
    CHECK((x == y) == (bx == by));
  }
  CHECK(PointSet::of(3, {1}) < PointSet::of(3, {0}));
}

TEST_CASE("width mismatch is rejected") {
  PointSet a(4), b(5);
  CHECK_THROWS_AS(a & b, bsts::Error);
  try {
    (void)(a | b);
  } catch (const bsts::Error& e) {
    CHECK(e.kind() == bsts::ErrorKind::WidthMismatch);
  }
}
