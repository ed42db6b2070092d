#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bsts/catalog.hpp"
#include "bsts/constructors.hpp"
#include "bsts/document.hpp"
#include "bsts/error.hpp"
#include "bsts/hyperplanes.hpp"

using namespace bsts;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("parse succeeded");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("serialization round-trips byte for byte") {
  const std::vector<ConfigurationDocument> docs{
      {"veblen", desargues(4), DocumentMeta{"grassmannian", {{"n", 4}}}},
      {"v33", veronesian(3), std::nullopt},
      {"tetra", perspective_system(tetrahedra_data(2)), DocumentMeta{"tetrahedra", {{"m", 2}}}},
      {"single-line", Configuration::unlabeled(3, {{0, 1, 2}}), std::nullopt},
  };
  for (const auto& doc : docs) {
    const auto text = serialize(doc);
    const auto back = parse_document(text);
    CHECK(back.name == doc.name);
    CHECK(back.cfg == doc.cfg);
    CHECK(back.meta == doc.meta);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("malformed documents are rejected") {
  const std::string good = serialize({"line", Configuration::unlabeled(3, {{0, 1, 2}}), std::nullopt});
  CHECK_NOTHROW(parse_document(good));
  std::string out_of_range = good;
  out_of_range.replace(out_of_range.find("[0, 1, 2]"), 9, "[0, 1, 7]");
  CHECK(parse_error_kind(out_of_range) == ErrorKind::ParseError);
  CHECK(parse_error_kind("{\"lines\": [") == ErrorKind::ParseError);
  CHECK(parse_error_kind(R"({"name":"x","points":[{"id":0,"label":"a"}],"lines":[[0,0]]})") == ErrorKind::ParseError);
  CHECK(parse_error_kind(R"({"name":"x","points":[{"id":0,"label":"a"},{"id":1,"label":"b"},{"id":2,"label":"c"},{"id":3,"label":"d"}],"lines":[[0,1,2]]})") ==
        ErrorKind::ValidationFailed);
}

TEST_CASE("catalog fixtures parse as 10_3 configurations") {
  const std::filesystem::path dir = BSTS_FIXTURE_DIR "/catalog_10_3";
  std::size_t files = 0;
  for (const auto& entry : catalog_103_unverified()) {
    const auto doc = read_document((dir / (entry.name + ".json")).string());
    ++files;
    CHECK(doc.name == entry.name);
    CHECK(doc.cfg.point_count() == 10);
    CHECK(doc.cfg.line_count() == 10);
    CHECK(doc.cfg.lines() == entry.cfg.lines());
    std::ifstream in(dir / (entry.name + ".json"), std::ios::binary);
    std::stringstream raw;
    raw << in.rdbuf();
    CHECK(serialize(doc) == raw.str());
  }
  CHECK(files == 10);
}

TEST_CASE("write and read back") {
  const auto path = (std::filesystem::temp_directory_path() / "bsts_document_test.json").string();
  const ConfigurationDocument doc{"r6", quasi_grassmannian(6), DocumentMeta{"quasi-grassmannian", {{"n", 6}}}};
  write_document(path, doc);
  CHECK(read_document(path).cfg == doc.cfg);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_document(path), Error);
}

TEST_CASE("Veldkamp DOT output") {
  const auto line = veldkamp_space(Configuration::unlabeled(3, {{0, 1, 2}}));
  const auto dot = emit_veldkamp_dot(line);
  CHECK(dot.rfind("graph veldkamp {", 0) == 0);
  CHECK(occurrences(dot, "[shape=point]") == 1);
  CHECK(occurrences(dot, " -- ") == 3);
  CHECK(occurrences(dot, "  h") == 3);

  const auto des = emit_veldkamp_dot(veldkamp_space(desargues(5)));
  CHECK(occurrences(des, "  h") == 15);
  CHECK(occurrences(des, "[shape=point]") == 35);
  CHECK(occurrences(des, " -- ") == 105);

  const auto empty = emit_veldkamp_dot(veldkamp_space(std::vector<PointSet>{}));
  CHECK(empty == "graph veldkamp {\n}\n");

  const std::vector<std::string> labels{"a", "b", "c"};
  CHECK(emit_veldkamp_dot(line, &labels).find("label=\"b\"") != std::string::npos);
}
