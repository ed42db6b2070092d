#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "bsts/catalog.hpp"

namespace bsts::detail {

struct CatalogFixture {
  std::string_view name;
  std::vector<Line> lines;  // empty for entries built by a constructor
  CatalogExpectation expected;
};

const std::vector<CatalogFixture>& catalog_fixtures();

}  // namespace bsts::detail
