#include "bsts/document.hpp"

#include <fstream>
#include <sstream>

namespace bsts {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& where, const std::string& reason) {
  throw Error(ErrorKind::ParseError, where + ": " + reason);
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

std::string serialize(const ConfigurationDocument& doc) {
  const auto& cfg = doc.cfg;
  std::ostringstream out;
  out << "{\n  \"lines\": [";
  for (std::size_t i = 0; i < cfg.line_count(); ++i) {
    const auto& l = cfg.line(i);
    out << (i == 0 ? "\n" : ",\n") << "    [" << l[0] << ", " << l[1] << ", " << l[2] << ']';
  }
  out << (cfg.line_count() == 0 ? "],\n" : "\n  ],\n");
  if (doc.meta) {
    json meta = {{"family", doc.meta->family}, {"parameters", doc.meta->parameters}};
    out << "  \"meta\": " << meta.dump() << ",\n";
  }
  out << "  \"name\": " << quoted(doc.name) << ",\n  \"points\": [";
  for (std::size_t p = 0; p < cfg.point_count(); ++p) {
    out << (p == 0 ? "\n" : ",\n") << "    {\"id\": " << p
        << ", \"label\": " << quoted(to_string(cfg.labels()[p])) << '}';
  }
  out << (cfg.point_count() == 0 ? "]\n" : "\n  ]\n") << "}\n";
  return out.str();
}

ConfigurationDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_error("byte " + std::to_string(e.byte), e.what());
  }
  if (!root.is_object()) parse_error("document", "top level must be an object");
  for (const auto& [key, _] : root.items()) {
    if (key != "lines" && key != "meta" && key != "name" && key != "points") parse_error(key, "unknown key");
  }
  ConfigurationDocument doc;
  if (!root.contains("name") || !root["name"].is_string()) parse_error("name", "missing or not a string");
  doc.name = root["name"].get<std::string>();

  if (!root.contains("points") || !root["points"].is_array()) parse_error("points", "missing or not an array");
  std::vector<PointLabel> labels;
  const auto& points = root["points"];
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!p.is_object() || !p.contains("id") || !p.contains("label")) parse_error(where, "expected {id, label}");
    if (!p["id"].is_number_integer() || p["id"].get<long long>() != static_cast<long long>(i)) {
      parse_error(where, "ids must be dense and in order from 0");
    }
    if (!p["label"].is_string()) parse_error(where, "label must be a string");
    labels.push_back(parse_label(p["label"].get<std::string>()));
  }

  if (!root.contains("lines") || !root["lines"].is_array()) parse_error("lines", "missing or not an array");
  std::vector<Line> lines;
  const auto& rows = root["lines"];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const std::string where = "lines[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != 3) parse_error(where, "expected a triple");
    Line l{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!row[k].is_number_integer()) parse_error(where, "ids must be integers");
      const auto v = row[k].get<long long>();
      if (v < 0 || v >= static_cast<long long>(labels.size())) parse_error(where, "id " + std::to_string(v) + " out of range");
      l[k] = static_cast<PointIndex>(v);
    }
    lines.push_back(l);
  }

  if (root.contains("meta")) {
    const auto& m = root["meta"];
    if (!m.is_object() || !m.contains("family") || !m["family"].is_string()) {
      parse_error("meta", "expected {family, parameters}");
    }
    DocumentMeta meta;
    meta.family = m["family"].get<std::string>();
    if (m.contains("parameters")) meta.parameters = m["parameters"];
    doc.meta = std::move(meta);
  }

  try {
    doc.cfg = Configuration(std::move(labels), std::move(lines));
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationFailed, e.what(), e.indices());
  }
  const auto report = validate_psts(doc.cfg);
  if (!report.is_psts) {
    throw Error(ErrorKind::ValidationFailed, report.issue ? report.issue->message : "not a PSTS",
                report.issue ? report.issue->indices : std::vector<int>{});
  }
  return doc;
}

ConfigurationDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

void write_document(const std::string& path, const ConfigurationDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, path + ": cannot write");
  out << serialize(doc);
}

std::string emit_veldkamp_dot(const VeldkampSpace& vs, const std::vector<std::string>* labels) {
  std::ostringstream out;
  out << "graph veldkamp {\n";
  for (std::size_t i = 0; i < vs.hyperplanes.size(); ++i) {
    out << "  h" << i;
    if (labels && i < labels->size()) out << " [label=" << quoted((*labels)[i]) << ']';
    out << ";\n";
  }
  for (std::size_t i = 0; i < vs.lines.size(); ++i) {
    out << "  l" << i << " [shape=point];\n";
    for (int h : vs.lines[i]) out << "  l" << i << " -- h" << h << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bsts
