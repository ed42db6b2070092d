#include <doctest.h>

#include <random>

#include "bsts/constructors.hpp"
#include "bsts/error.hpp"
#include "bsts/partition.hpp"

using namespace bsts;

TEST_CASE("hipcap laws hold exhaustively on width 4") {
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b) {
      PointSet x(4), y(4);
      for (int p = 0; p < 4; ++p) {
        x.set(p, (a >> p) & 1);
        y.set(p, (b >> p) & 1);
      }
      CHECK(hipcap(x, y) == hipcap(y, x));
      CHECK(hipcap(x, x).is_full());
      CHECK(hipcap(x, PointSet::full(4)) == x);
      CHECK(hipcap(x, hipcap(x, y)) == y);
    }
}

TEST_CASE("hipcap is associative on random sets") {
  std::mt19937 rng(3);
  for (int round = 0; round < 500; ++round) {
    const std::size_t width = 1 + rng() % 100;
    PointSet x(width), y(width), z(width);
    for (std::size_t p = 0; p < width; ++p) {
      x.set(static_cast<int>(p), rng() & 1);
      y.set(static_cast<int>(p), rng() & 1);
      z.set(static_cast<int>(p), rng() & 1);
    }
    CHECK(hipcap(hipcap(x, y), z) == hipcap(x, hipcap(y, z)));
    CHECK(hipcap(x, y) == (x ^ y).complement());
  }
  CHECK_THROWS_AS(hipcap(PointSet(3), PointSet(4)), Error);
}

TEST_CASE("partition hyperplanes of G(5,2)") {
  const auto g = desargues(5);
  const std::vector<int> a{1, 2};
  const auto h = partition_hyperplane(g, a);
  CHECK(h.count() == 4);  // {1,2} and the three pairs of {3,4,5}
  CHECK(h.contains(*g.find_label(Pair{1, 2})));
  CHECK(h.contains(*g.find_label(Pair{4, 5})));
  CHECK(partition_hyperplane(g, std::vector<int>{3, 4, 5}) == h);
  PartitionSpec spec{{1, 2, 3, 4, 5}, {1}};
  CHECK(spec.complement_part() == std::vector<int>{2, 3, 4, 5});
  CHECK(partition_hyperplane(g, spec).count() == 6);
  CHECK_THROWS_AS(partition_hyperplane(veronesian(3), std::vector<int>{1}), Error);
}

TEST_CASE("generated subalgebra of partition hyperplanes") {
  const auto g = desargues(5);
  std::vector<PointSet> gens;
  for (int x = 1; x <= 5; ++x) gens.push_back(partition_hyperplane(g, std::vector<int>{x}));
  const auto alg = generate_subalgebra(gens);
  CHECK(alg.size() == 15);  // every H(A|W∖A), 2^4 - 1
  CHECK(std::is_sorted(alg.begin(), alg.end()));
  CHECK_THROWS_AS(generate_subalgebra(gens, 4), Error);
}
