#include "bsts/hyperplanes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "bsts/catalog.hpp"
#include "bsts/partition.hpp"

namespace bsts {

namespace {

class HyperplaneSearch {
 public:
  HyperplaneSearch(const Configuration& cfg, const SearchBudget& budget)
      : cfg_(cfg),
        counter_(budget, "hyperplane enumeration"),
        value_(cfg.point_count(), -1),
        inside_(cfg.line_count(), 0),
        outside_(cfg.line_count(), 0),
        order_(cfg.point_count()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return cfg.rank(a) > cfg.rank(b); });
  }

  std::vector<PointSet> run() {
    dfs();
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool assign(PointIndex start, int start_value) {
    std::vector<std::pair<PointIndex, int>> pending{{start, start_value}};
    while (!pending.empty()) {
      const auto [p, v] = pending.back();
      pending.pop_back();
      auto& slot = value_[static_cast<std::size_t>(p)];
      if (slot != -1) {
        if (slot != v) return false;
        continue;
      }
      slot = static_cast<signed char>(v);
      trail_.push_back(p);
      for (int li : cfg_.lines_through(p)) (v == 1 ? inside_ : outside_)[static_cast<std::size_t>(li)]++;
      for (int li : cfg_.lines_through(p)) {
        const auto l = static_cast<std::size_t>(li);
        const int in = inside_[l];
        const int out = outside_[l];
        if ((in == 2 && out == 1) || out == 3) return false;
        if (in + out != 2) continue;
        PointIndex rest = -1;
        for (PointIndex q : cfg_.line(l)) {
          if (value_[static_cast<std::size_t>(q)] == -1) rest = q;
        }
        // A line must end with one or three points inside.
        pending.emplace_back(rest, in == 1 ? 0 : 1);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const PointIndex p = trail_.back();
      trail_.pop_back();
      const bool was_in = value_[static_cast<std::size_t>(p)] == 1;
      for (int li : cfg_.lines_through(p)) (was_in ? inside_ : outside_)[static_cast<std::size_t>(li)]--;
      value_[static_cast<std::size_t>(p)] = -1;
    }
  }

  void dfs() {
    counter_.tick();
    auto next = std::find_if(order_.begin(), order_.end(),
                             [&](int p) { return value_[static_cast<std::size_t>(p)] == -1; });
    if (next == order_.end()) {
      PointSet h(cfg_.point_count());
      for (std::size_t p = 0; p < value_.size(); ++p) {
        if (value_[p] == 1) h.insert(static_cast<PointIndex>(p));
      }
      if (!h.is_full()) found_.push_back(std::move(h));
      return;
    }
    for (int v : {1, 0}) {
      const std::size_t mark = trail_.size();
      if (assign(*next, v)) dfs();
      undo(mark);
    }
  }

  const Configuration& cfg_;
  NodeCounter counter_;
  std::vector<signed char> value_;
  std::vector<int> inside_;
  std::vector<int> outside_;
  std::vector<int> order_;
  std::vector<PointIndex> trail_;
  std::vector<PointSet> found_;
};

std::string component_tag(const ComponentGeometry& c) {
  if (c.binomial) return to_string(*c.binomial);
  std::ostringstream out;
  out << 'P' << c.points << 'L' << c.lines;
  return out.str();
}

PointSet uncollinear_with(const Configuration& cfg, const PointSet& other) {
  PointSet out(cfg.point_count());
  const auto members = other.members();
  for (std::size_t p = 0; p < cfg.point_count(); ++p) {
    const auto pi = static_cast<PointIndex>(p);
    if (other.contains(pi)) continue;
    const bool lonely = std::none_of(members.begin(), members.end(), [&](PointIndex q) { return cfg.collinear(pi, q); });
    if (lonely) out.insert(pi);
  }
  return out;
}

}  // namespace

std::vector<PointSet> enumerate_hyperplanes(const Configuration& cfg, const SearchBudget& budget) {
  return HyperplaneSearch(cfg, budget).run();
}

std::vector<PointSet> brute_force_hyperplanes(const Configuration& cfg) {
  const std::size_t n = cfg.point_count();
  if (n > 24) throw Error(ErrorKind::InvalidArgument, "brute force is limited to 24 points");
  std::vector<std::uint32_t> masks;
  for (const auto& l : cfg.lines()) masks.push_back((1u << l[0]) | (1u << l[1]) | (1u << l[2]));
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<PointSet> out;
  for (std::uint64_t s = 0; s < full; ++s) {
    const auto subset = static_cast<std::uint32_t>(s);
    const bool ok = std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) {
      const int k = std::popcount(subset & m);
      return k == 1 || k == 3;
    });
    if (!ok) continue;
    PointSet h(n);
    for (std::size_t p = 0; p < n; ++p) {
      if ((subset >> p) & 1u) h.insert(static_cast<PointIndex>(p));
    }
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VeldkampSpace veldkamp_space(std::vector<PointSet> hyperplanes) {
  std::sort(hyperplanes.begin(), hyperplanes.end());
  const std::size_t count = hyperplanes.size();
  VeldkampSpace vs;
  int dimension = -1;
  while ((std::size_t{1} << (dimension + 1)) - 1 < count) ++dimension;
  if ((std::size_t{1} << (dimension + 1)) - 1 != count) {
    throw Error(ErrorKind::NotProjective, std::to_string(count) + " hyperplanes is not of the form 2^(n+1)-1");
  }
  std::unordered_map<PointSet, int, PointSetHash> index;
  for (std::size_t i = 0; i < count; ++i) index.emplace(hyperplanes[i], static_cast<int>(i));
  std::set<std::array<int, 3>> lines;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const auto it = index.find(hipcap(hyperplanes[i], hyperplanes[j]));
      if (it == index.end()) {
        throw Error(ErrorKind::NotProjective, "hyperplane list is not closed under hipcap",
                    {static_cast<int>(i), static_cast<int>(j)});
      }
      const int k = it->second;
      if (k == static_cast<int>(i) || k == static_cast<int>(j)) {
        throw Error(ErrorKind::NotProjective, "degenerate Veldkamp line", {static_cast<int>(i), static_cast<int>(j)});
      }
      std::array<int, 3> line{static_cast<int>(i), static_cast<int>(j), k};
      std::sort(line.begin(), line.end());
      lines.insert(line);
    }
  }
  if (lines.size() * 6 != count * (count - (count > 0 ? 1 : 0))) {
    throw Error(ErrorKind::NotProjective, "two hyperplanes lie on more than one Veldkamp line");
  }
  vs.hyperplanes = std::move(hyperplanes);
  vs.lines.assign(lines.begin(), lines.end());
  vs.dimension = dimension;
  return vs;
}

VeldkampSpace veldkamp_space(const Configuration& cfg, const SearchBudget& budget) {
  return veldkamp_space(enumerate_hyperplanes(cfg, budget));
}

HyperplaneGeometry classify_hyperplane(const Configuration& cfg, const PointSet& h) {
  if (!is_hyperplane(cfg, h)) throw Error(ErrorKind::NotAHyperplane, "set is not a hyperplane");
  const auto inner = restrict_to(cfg, h);
  const std::size_t n = inner.cfg.point_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& l : inner.cfg.lines()) {
    parent[static_cast<std::size_t>(find(l[1]))] = find(l[0]);
    parent[static_cast<std::size_t>(find(l[2]))] = find(l[0]);
  }
  std::map<int, PointSet> groups;
  for (std::size_t p = 0; p < n; ++p) {
    auto [it, _] = groups.try_emplace(find(static_cast<int>(p)), n);
    it->second.insert(static_cast<PointIndex>(p));
  }
  HyperplaneGeometry out;
  for (const auto& [root, members] : groups) {
    const auto part = restrict_to(inner.cfg, members);
    ComponentGeometry c;
    c.members = PointSet(cfg.point_count());
    for (PointIndex p : members.members()) c.members.insert(inner.to_parent[static_cast<std::size_t>(p)]);
    c.points = part.cfg.point_count();
    c.lines = part.cfg.line_count();
    if (c.points == 1 && c.lines == 0) {
      c.binomial = BinomialType{2, 0};
    } else if (c.points == 3 && c.lines == 1) {
      c.binomial = BinomialType{3, 0};
    } else {
      c.binomial = validate_psts(part.cfg).binomial;
    }
    c.signature = canonical_form(part.cfg);
    c.tag = component_tag(c);
    out.components.push_back(std::move(c));
  }
  std::sort(out.components.begin(), out.components.end(), [](const ComponentGeometry& a, const ComponentGeometry& b) {
    return std::tie(a.points, a.lines, a.tag, a.signature.certificate) <
           std::tie(b.points, b.lines, b.tag, b.signature.certificate);
  });
  for (const auto& c : out.components) {
    if (!out.label.empty()) out.label += '+';
    out.label += c.tag;
  }
  return out;
}

std::map<std::string, std::size_t> LabeledVeldkamp::label_counts() const {
  std::map<std::string, std::size_t> counts;
  for (const auto& g : geometry) ++counts[g.label];
  return counts;
}

std::string LabeledVeldkamp::summary() const {
  std::ostringstream out;
  out << "PG(" << space.dimension << ",2)";
  for (const auto& [label, count] : label_counts()) out << ' ' << label << ':' << count;
  return out.str();
}

LabeledVeldkamp labeled_veldkamp(const Configuration& cfg, const SearchBudget& budget) {
  LabeledVeldkamp out;
  out.space = veldkamp_space(cfg, budget);
  out.geometry.reserve(out.space.hyperplanes.size());
  for (const auto& h : out.space.hyperplanes) out.geometry.push_back(classify_hyperplane(cfg, h));
  return out;
}

HypothesisReport check_connected_or_split_hypothesis(const Configuration& cfg, const SearchBudget& budget) {
  const auto validation = validate_psts(cfg);
  if (!validation.is_psts || !validation.binomial) {
    throw Error(ErrorKind::NotBinomial, "configuration is not binomial");
  }
  HypothesisReport report;
  report.n = validation.binomial->order();
  const auto hyperplanes = enumerate_hyperplanes(cfg, budget);
  report.hyperplane_count = hyperplanes.size();
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    const auto g = classify_hyperplane(cfg, hyperplanes[i]);
    std::string reason;
    if (g.components.size() == 1) {
      const auto& c = g.components[0];
      if (!c.binomial || c.binomial->order() != report.n - 1) {
        reason = "connected but not of type " + to_string(BinomialType{report.n - 1, 0});
      }
    } else if (g.components.size() == 2) {
      ++report.split_count;
      const auto& a = g.components[0];
      const auto& b = g.components[1];
      if (!a.binomial || !b.binomial) {
        reason = "split with a non-binomial component";
      } else if (a.binomial->order() + b.binomial->order() != report.n) {
        reason = "split component orders do not sum to " + std::to_string(report.n);
      }
      if (uncollinear_with(cfg, a.members) != b.members || uncollinear_with(cfg, b.members) != a.members) {
        report.mutual_complement = false;
        report.mutual_complement_failures.push_back(i);
      }
    } else {
      reason = std::to_string(g.components.size()) + " components";
    }
    if (!reason.empty()) {
      report.holds = false;
      report.counterexamples.push_back({i, g.label, reason});
    }
  }
  return report;
}

}  // namespace bsts
