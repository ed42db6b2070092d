#include "catalog_fixtures.hpp"

namespace bsts::detail {

// Line sets of the 10_3 classes as produced by the B(5,0) census, in
// canonical numbering. Desargues and Kantor are built by their constructors
// (G(5,2) and V(3,3)). Names follow the invariants: hyperplane count first,
// then Kantor = V(3,3), basinet = the class whose single hyperplane is a
// Veblen configuration. The fez/headdress split and the order of the
// hyperplane-free classes follow ascending certificates.
const std::vector<CatalogFixture>& catalog_fixtures() {
  static const std::vector<CatalogFixture> fixtures = {
      {"desargues",
       {},
       {15, 5, 5, "PG(3,2) B(2,0)+B(3,0):10 B(4,0):5"}},
      {"kantor",
       {},
       {7, 3, 3, "PG(2,2) B(2,0)+B(3,0):4 B(4,0):3"}},
      {"nightcap",
       {{0, 1, 4}, {0, 2, 5}, {0, 3, 6}, {1, 2, 3}, {1, 7, 8}, {2, 7, 9}, {3, 8, 9}, {4, 5, 7}, {4, 6, 8}, {5, 6, 9}},
       {7, 1, 1, "PG(2,2) B(2,0)+B(3,0):6 B(4,0):1"}},
      {"fez",
       {{0, 1, 2}, {0, 3, 5}, {0, 4, 6}, {1, 3, 7}, {1, 4, 9}, {2, 5, 7}, {2, 6, 8}, {3, 4, 8}, {5, 8, 9}, {6, 7, 9}},
       {3, 2, 2, "PG(1,2) B(2,0)+B(3,0):1 B(4,0):2"}},
      {"headdress",
       {{0, 1, 4}, {0, 2, 5}, {0, 3, 6}, {1, 2, 3}, {1, 7, 8}, {2, 7, 9}, {3, 8, 9}, {4, 5, 7}, {4, 6, 9}, {5, 6, 8}},
       {3, 1, 1, "PG(1,2) B(2,0)+B(3,0):2 B(4,0):1"}},
      {"basinet",
       {{0, 1, 2}, {0, 3, 5}, {0, 4, 6}, {1, 3, 9}, {1, 4, 7}, {2, 3, 8}, {2, 6, 7}, {4, 5, 8}, {5, 7, 9}, {6, 8, 9}},
       {1, 1, 1, "PG(0,2) B(4,0):1"}},
      {"overseas-cap",
       {{0, 1, 5}, {0, 2, 6}, {0, 3, 4}, {1, 2, 3}, {1, 4, 7}, {2, 5, 8}, {3, 8, 9}, {4, 6, 9}, {5, 7, 9}, {6, 7, 8}},
       {1, 0, 0, "PG(0,2) B(2,0)+B(3,0):1"}},
      {"hyperplane-free-a",
       {{0, 1, 4}, {0, 2, 5}, {0, 3, 6}, {1, 2, 3}, {1, 5, 8}, {2, 4, 7}, {3, 8, 9}, {4, 6, 9}, {5, 7, 9}, {6, 7, 8}},
       {0, 0, 0, "PG(-1,2)"}},
      {"hyperplane-free-b",
       {{0, 1, 4}, {0, 2, 5}, {0, 3, 6}, {1, 2, 3}, {1, 6, 8}, {2, 4, 7}, {3, 8, 9}, {4, 5, 9}, {5, 7, 8}, {6, 7, 9}},
       {0, 0, 0, "PG(-1,2)"}},
      {"hyperplane-free-c",
       {{0, 1, 6}, {0, 2, 4}, {0, 3, 5}, {1, 2, 3}, {1, 4, 7}, {2, 8, 9}, {3, 7, 9}, {4, 5, 8}, {5, 6, 9}, {6, 7, 8}},
       {0, 0, 0, "PG(-1,2)"}},
  };
  return fixtures;
}

}  // namespace bsts::detail
