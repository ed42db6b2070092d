#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bsts/configuration.hpp"
#include "bsts/hyperplanes.hpp"

namespace bsts {

struct DocumentMeta {
  std::string family;
  nlohmann::json parameters = nlohmann::json::object();
  friend bool operator==(const DocumentMeta&, const DocumentMeta&) = default;
};

/// A named configuration as stored on disk.
///
/// The text form is JSON with sorted keys, one point or line per row:
///
///     {
///       "lines": [
///         [0, 1, 2]
///       ],
///       "meta": {"family":"line","parameters":{}},
///       "name": "single-line",
///       "points": [
///         {"id": 0, "label": "0"},
///         ...
///       ]
///     }
struct ConfigurationDocument {
  std::string name;
  Configuration cfg;
  std::optional<DocumentMeta> meta;
};

std::string serialize(const ConfigurationDocument& doc);

/// Throws `Error{ParseError}` for malformed text, bad ids or triples, and
/// `Error{ValidationFailed}` when the configuration is not a PSTS.
ConfigurationDocument parse_document(std::string_view text);

ConfigurationDocument read_document(const std::string& path);
void write_document(const std::string& path, const ConfigurationDocument& doc);

/// Graphviz text: one node per hyperplane, one junction node per Veldkamp
/// line joined to its three members. `labels`, when given, tag the
/// hyperplane nodes.
std::string emit_veldkamp_dot(const VeldkampSpace& vs, const std::vector<std::string>* labels = nullptr);

}  // namespace bsts
