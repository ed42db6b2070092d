#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bsts/canonical.hpp"
#include "bsts/catalog.hpp"
#include "bsts/constructors.hpp"

using namespace bsts;

namespace {

Configuration shuffled(const Configuration& cfg, std::mt19937& rng) {
  std::vector<PointIndex> perm(cfg.point_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute(cfg, perm);
}

}  // namespace

TEST_CASE("certificates survive 1000 random relabelings of every 10_3 entry") {
  std::mt19937 rng(2024);
  for (const auto& entry : catalog_103_unverified()) {
    const auto reference = canonical_certificate(entry.cfg);
    for (int round = 0; round < 1000; ++round)
      REQUIRE_MESSAGE(canonical_certificate(shuffled(entry.cfg, rng)) == reference, entry.name);
  }
}

TEST_CASE("the ten 10_3 entries are pairwise non-isomorphic") {
  const auto entries = catalog_103_unverified();
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      CHECK_FALSE(are_isomorphic(entries[i].cfg, entries[j].cfg));
}

TEST_CASE("V(3,2) is isomorphic to G(4,2)") {
  CHECK(are_isomorphic(veronesian(2), desargues(4)));
  CHECK(are_isomorphic(quasi_grassmannian(4), desargues(4)));
  CHECK_FALSE(are_isomorphic(veronesian(3), desargues(5)));
}

TEST_CASE("larger configurations relabel consistently") {
  std::mt19937 rng(5);
  for (const auto& cfg : {quasi_grassmannian(8), veronesian(5), desargues(7), dual_veronesian(5)}) {
    const auto reference = canonical_certificate(cfg);
    for (int round = 0; round < 20; ++round) CHECK(canonical_certificate(shuffled(cfg, rng)) == reference);
  }
}

TEST_CASE("canonical copy and automorphisms") {
  const auto g = desargues(5);
  auto lab = canonical_labeling(g);
  CHECK(canonical_copy(g) == canonical_copy(permute(g, std::vector<PointIndex>{9, 8, 7, 6, 5, 4, 3, 2, 1, 0})));
  CHECK_FALSE(lab.automorphisms.empty());
  for (const auto& aut : lab.automorphisms) CHECK(permute(g, aut).lines() == g.lines());
}

TEST_CASE("initial colours are part of the certificate") {
  const auto g = desargues(4);
  std::vector<int> plain(g.point_count(), 0);
  std::vector<int> marked = plain;
  marked[0] = 1;
  std::vector<int> marked_other = plain;
  marked_other[5] = 1;
  CHECK(canonical_labeling(g, plain).certificate != canonical_labeling(g, marked).certificate);
  // G(4,2) is point-transitive.
  CHECK(canonical_labeling(g, marked).certificate == canonical_labeling(g, marked_other).certificate);
}
