#include "bsts/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

namespace bsts {

std::string Certificate::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out += kDigits[b >> 4];
    out += kDigits[b & 15];
  }
  return out;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

class IncidenceSearch {
 public:
  IncidenceSearch(const Configuration& cfg, std::span<const int> point_colors, std::span<const int> line_colors)
      : points_(cfg.point_count()), lines_(cfg.line_count()), vertices_(points_ + lines_) {
    if (!point_colors.empty() && point_colors.size() != points_) {
      throw Error(ErrorKind::SizeMismatch, "point colouring has the wrong length");
    }
    if (!line_colors.empty() && line_colors.size() != lines_) {
      throw Error(ErrorKind::SizeMismatch, "line colouring has the wrong length");
    }
    adjacency_.resize(vertices_);
    for (std::size_t li = 0; li < lines_; ++li) {
      for (PointIndex p : cfg.line(li)) {
        adjacency_[points_ + li].push_back(static_cast<int>(p));
        adjacency_[static_cast<std::size_t>(p)].push_back(static_cast<int>(points_ + li));
      }
    }
    initial_.assign(vertices_, 0);
    int top = 0;
    for (std::size_t p = 0; p < points_; ++p) {
      initial_[p] = point_colors.empty() ? 0 : point_colors[p];
      top = std::max(top, initial_[p]);
    }
    for (std::size_t li = 0; li < lines_; ++li) {
      initial_[points_ + li] = top + 1 + (line_colors.empty() ? 0 : line_colors[li]);
    }
  }

  CanonicalLabeling run() {
    std::vector<int> colors = initial_;
    std::vector<int> prefix;
    visit(colors, prefix);
    CanonicalLabeling out;
    out.canonical_index.assign(best_leaf_.begin(), best_leaf_.begin() + static_cast<std::ptrdiff_t>(points_));
    out.certificate = encode(best_cert_);
    out.automorphisms = std::move(automorphisms_);
    out.nodes = nodes_;
    return out;
  }

 private:
  // Colour refinement: new colour = rank of (old colour, sorted neighbour
  // colours). Ranks keep the old order, so the partition only refines.
  // Returns an invariant hash of the stable partition.
  std::uint64_t refine(std::vector<int>& colors) const {
    std::vector<int> order(vertices_);
    std::vector<std::vector<int>> signature(vertices_);
    std::size_t classes = count_classes(colors);
    for (;;) {
      for (std::size_t v = 0; v < vertices_; ++v) {
        auto& s = signature[v];
        s.clear();
        s.push_back(colors[v]);
        for (int u : adjacency_[v]) s.push_back(colors[static_cast<std::size_t>(u)]);
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return signature[static_cast<std::size_t>(a)] < signature[static_cast<std::size_t>(b)];
      });
      std::vector<int> next(vertices_);
      int rank = 0;
      std::uint64_t hash = 0;
      for (std::size_t i = 0; i < vertices_; ++i) {
        const auto v = static_cast<std::size_t>(order[i]);
        if (i > 0 && signature[v] != signature[static_cast<std::size_t>(order[i - 1])]) rank = static_cast<int>(i);
        next[v] = rank;
        for (int c : signature[v]) hash = mix(hash, static_cast<std::uint64_t>(c));
      }
      colors = std::move(next);
      const std::size_t now = count_classes(colors);
      if (now == classes) return mix(hash, now);
      classes = now;
    }
  }

  std::size_t count_classes(const std::vector<int>& colors) const {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  // Vertices of the first non-singleton point cell, or empty when points are discrete.
  std::vector<int> target_cell(const std::vector<int>& colors) const {
    std::vector<std::pair<int, int>> by_color;
    by_color.reserve(points_);
    for (std::size_t p = 0; p < points_; ++p) by_color.emplace_back(colors[p], static_cast<int>(p));
    std::sort(by_color.begin(), by_color.end());
    for (std::size_t i = 0; i < by_color.size();) {
      std::size_t j = i;
      while (j < by_color.size() && by_color[j].first == by_color[i].first) ++j;
      if (j - i > 1) {
        std::vector<int> cell;
        for (std::size_t t = i; t < j; ++t) cell.push_back(by_color[t].second);
        return cell;
      }
      i = j;
    }
    return {};
  }

  std::vector<int> leaf_certificate(const std::vector<int>& colors) const {
    std::vector<int> cert;
    cert.reserve(2 + points_ + 4 * lines_);
    cert.push_back(static_cast<int>(points_));
    cert.push_back(static_cast<int>(lines_));
    std::vector<int> point_color_at(points_);
    for (std::size_t p = 0; p < points_; ++p) point_color_at[static_cast<std::size_t>(colors[p])] = initial_[p];
    cert.insert(cert.end(), point_color_at.begin(), point_color_at.end());
    std::vector<std::array<int, 4>> rows;
    rows.reserve(lines_);
    for (std::size_t li = 0; li < lines_; ++li) {
      std::array<int, 4> row{};
      for (std::size_t k = 0; k < 3; ++k) row[k] = colors[static_cast<std::size_t>(adjacency_[points_ + li][k])];
      std::sort(row.begin(), row.begin() + 3);
      row[3] = initial_[points_ + li];
      rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& r : rows) cert.insert(cert.end(), r.begin(), r.end());
    return cert;
  }

  static Certificate encode(const std::vector<int>& cert) {
    Certificate out;
    out.bytes.reserve(cert.size() * 2);
    for (int v : cert) {
      out.bytes.push_back(static_cast<std::uint8_t>(v & 0xff));
      out.bytes.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    }
    return out;
  }

  bool in_explored_orbit(int w, const std::vector<int>& explored, const std::vector<int>& prefix) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(points_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      const bool fixes_prefix = std::all_of(prefix.begin(), prefix.end(), [&](int v) {
        return gamma[static_cast<std::size_t>(v)] == v;
      });
      if (!fixes_prefix) continue;
      for (std::size_t p = 0; p < points_; ++p) {
        const int a = find(static_cast<int>(p));
        const int b = find(gamma[p]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
    const int root = find(w);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == root; });
  }

  void visit(std::vector<int>& colors, std::vector<int>& prefix) {
    ++nodes_;
    const std::uint64_t t = refine(colors);
    const std::size_t depth = prefix.size();
    trace_.resize(depth);
    trace_.push_back(t);
    if (have_best_) {
      // Prune when the trace so far is already below the best leaf's.
      for (std::size_t d = 0; d <= depth && d < best_trace_.size(); ++d) {
        if (trace_[d] < best_trace_[d]) return;
        if (trace_[d] > best_trace_[d]) break;
      }
    }
    const auto cell = target_cell(colors);
    if (cell.empty()) {
      auto cert = leaf_certificate(colors);
      const auto cmp = std::tie(trace_, cert) <=> std::tie(best_trace_, best_cert_);
      if (!have_best_ || cmp > 0) {
        have_best_ = true;
        best_trace_ = trace_;
        best_cert_ = std::move(cert);
        best_leaf_ = colors;
      } else if (cmp == 0) {
        std::vector<int> vertex_at(vertices_);
        for (std::size_t v = 0; v < vertices_; ++v) vertex_at[static_cast<std::size_t>(best_leaf_[v])] = static_cast<int>(v);
        std::vector<PointIndex> gamma(points_);
        for (std::size_t p = 0; p < points_; ++p) gamma[p] = vertex_at[static_cast<std::size_t>(colors[p])];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }
    std::vector<int> explored;
    for (int w : cell) {
      if (in_explored_orbit(w, explored, prefix)) continue;
      std::vector<int> child(vertices_);
      for (std::size_t v = 0; v < vertices_; ++v) child[v] = 2 * colors[v] + 1;
      child[static_cast<std::size_t>(w)] -= 1;
      prefix.push_back(w);
      visit(child, prefix);
      prefix.pop_back();
      trace_.resize(depth + 1);
      explored.push_back(w);
    }
  }

  std::size_t points_;
  std::size_t lines_;
  std::size_t vertices_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> initial_;

  std::vector<std::uint64_t> trace_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_trace_;
  std::vector<int> best_cert_;
  std::vector<int> best_leaf_;
  std::vector<std::vector<PointIndex>> automorphisms_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Configuration& cfg, std::span<const int> point_colors,
                                     std::span<const int> line_colors) {
  return IncidenceSearch(cfg, point_colors, line_colors).run();
}

Certificate canonical_certificate(const Configuration& cfg) { return canonical_labeling(cfg).certificate; }

Configuration canonical_copy(const Configuration& cfg) {
  const auto labeling = canonical_labeling(cfg);
  std::vector<Line> lines;
  lines.reserve(cfg.line_count());
  for (const auto& l : cfg.lines()) {
    lines.push_back({labeling.canonical_index[static_cast<std::size_t>(l[0])],
                     labeling.canonical_index[static_cast<std::size_t>(l[1])],
                     labeling.canonical_index[static_cast<std::size_t>(l[2])]});
  }
  return Configuration::unlabeled(cfg.point_count(), std::move(lines));
}

bool are_isomorphic(const Configuration& a, const Configuration& b) {
  if (a.point_count() != b.point_count() || a.line_count() != b.line_count()) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace bsts
