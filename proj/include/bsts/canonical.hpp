#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bsts/configuration.hpp"

namespace bsts {

/// Canonical encoding of the point-line incidence graph: equal certificates
/// iff isomorphic configurations (respecting any initial colouring).
struct Certificate {
  std::vector<std::uint8_t> bytes;

  std::string to_hex() const;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

/// Counts carried next to the certificate. `rank` is -1 when point ranks
/// differ; `free_graphs` counts free complete graphs of size `free_graph_size`
/// (order - 1 for binomial shapes, else the largest size present).
struct SignatureSummary {
  std::size_t points = 0;
  std::size_t lines = 0;
  int rank = 0;
  std::size_t hyperplanes = 0;
  std::size_t free_graphs = 0;
  int free_graph_size = 0;
  friend auto operator<=>(const SignatureSummary&, const SignatureSummary&) = default;
};

struct GeometrySignature {
  Certificate certificate;
  SignatureSummary summary;
  friend auto operator<=>(const GeometrySignature&, const GeometrySignature&) = default;
};

struct CanonicalLabeling {
  std::vector<PointIndex> canonical_index;  // point -> canonical position
  Certificate certificate;
  /// Point automorphisms met during the search (not necessarily a full
  /// generating set).
  std::vector<std::vector<PointIndex>> automorphisms;
  std::uint64_t nodes = 0;
};

/// Individualization-refinement on the bipartite incidence graph.
///
/// `point_colors` / `line_colors`, when non-empty, are an initial colouring
/// (non-negative integers, one per point / line). Their values must already
/// be labelling-independent; they are part of the certificate.
CanonicalLabeling canonical_labeling(const Configuration& cfg, std::span<const int> point_colors = {},
                                     std::span<const int> line_colors = {});

Certificate canonical_certificate(const Configuration& cfg);

/// The configuration renumbered by its canonical labeling (labels dropped).
Configuration canonical_copy(const Configuration& cfg);

bool are_isomorphic(const Configuration& a, const Configuration& b);

}  // namespace bsts
