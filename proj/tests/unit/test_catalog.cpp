#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "bsts/canonical.hpp"
#include "bsts/catalog.hpp"
#include "bsts/constructors.hpp"
#include "bsts/error.hpp"
#include "bsts/hyperplanes.hpp"

using namespace bsts;

namespace {

// Every B(4,0) (6 points, 4 lines, rank 2) on a fixed point set, by brute
// force over 4-subsets of the 20 possible triples.
std::vector<Configuration> all_labelled_b4() {
  std::vector<Line> triples;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) triples.push_back({a, b, c});
  std::vector<Configuration> out;
  const int t = static_cast<int>(triples.size());
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      for (int k = j + 1; k < t; ++k)
        for (int l = k + 1; l < t; ++l) {
          auto cfg = Configuration::unlabeled(6, {triples[i], triples[j], triples[k], triples[l]});
          const auto report = validate_psts(cfg);
          if (report.is_psts && report.binomial && report.binomial->order() == 4) out.push_back(cfg);
        }
  return out;
}

}  // namespace

TEST_CASE("n = 4 census agrees with a brute-force oracle") {
  const auto labelled = all_labelled_b4();
  CHECK(labelled.size() == 30);  // 6! / |S_4|
  std::set<Certificate> certs;
  for (const auto& cfg : labelled) certs.insert(canonical_certificate(cfg));
  const auto census = generate_all_binomial(4);
  CHECK(census.classes.size() == certs.size());
  CHECK(census.classes.size() == 1);
  CHECK(are_isomorphic(census.classes[0].representative, desargues(4)));
}

TEST_CASE("small censuses") {
  CHECK(generate_all_binomial(2).classes.size() == 1);
  CHECK(generate_all_binomial(3).classes.size() == 1);
  CHECK_THROWS_AS(generate_all_binomial(1), Error);
  CHECK_THROWS_AS(generate_all_binomial(7), Error);
}

TEST_CASE("n = 6 census needs more than a small budget") {
  try {
    generate_all_binomial(6, SearchBudget{100000});
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchBudgetExceeded);
  }
}

TEST_CASE("n = 5 census reproduces the catalog") {
  const auto census = generate_all_binomial(5);
  REQUIRE(census.classes.size() == 10);
  const auto catalog = catalog_103();
  std::set<Certificate> from_census, from_catalog;
  for (const auto& c : census.classes) from_census.insert(c.signature.certificate);
  for (const auto& e : catalog) from_catalog.insert(canonical_certificate(e.cfg));
  CHECK(from_census == from_catalog);

  std::map<std::size_t, int> by_hyperplanes;
  for (const auto& e : catalog) ++by_hyperplanes[e.expected.hyperplane_count];
  CHECK(by_hyperplanes == std::map<std::size_t, int>{{0, 3}, {1, 2}, {3, 2}, {7, 2}, {15, 1}});
}

TEST_CASE("catalog entries carry the stated invariants") {
  std::map<std::string, CatalogExpectation> by_name;
  for (const auto& e : catalog_103()) by_name[e.name] = e.expected;
  CHECK(by_name.at("desargues").hyperplane_count == 15);
  CHECK(by_name.at("kantor").hyperplane_count == 7);
  CHECK(by_name.at("basinet").veblen_count == 1);
  CHECK(by_name.at("overseas-cap").veblen_count == 0);
  CHECK(are_isomorphic(catalog_103_unverified()[1].cfg, veronesian(3)));
  CHECK(veblen_count(desargues(5)) == 5);
  CHECK(veblen_count(desargues(4)) == 1);
}

TEST_CASE("a corrupted expectation is rejected") {
  auto entry = catalog_103_unverified().front();
  entry.expected.veblen_count += 1;
  try {
    verify_entry(entry);
    FAIL("expected a fixture mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FixtureMismatch);
    CHECK(std::string(e.what()).find("veblen") != std::string::npos);
  }
}

TEST_CASE("canonical form summary") {
  const auto sig = canonical_form(desargues(5));
  CHECK(sig.summary.points == 10);
  CHECK(sig.summary.lines == 10);
  CHECK(sig.summary.rank == 3);
  CHECK(sig.summary.hyperplanes == 15);
  CHECK(sig.summary.free_graphs == 5);
  CHECK(sig.summary.free_graph_size == 4);
}
