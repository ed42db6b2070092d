#include "bsts/subgraphs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bsts {

std::string_view to_string(FreeGraphClause clause) noexcept {
  switch (clause) {
    case FreeGraphClause::TooSmall: return "fewer than two vertices";
    case FreeGraphClause::NotJoinable: return "a vertex pair is not joinable";
    case FreeGraphClause::CollinearTriple: return "three vertices are collinear";
    case FreeGraphClause::OverlappingLines: return "disjoint vertex pairs have meeting lines";
  }
  return "unknown";
}

std::string_view to_string(PartitionCriterion criterion) noexcept {
  switch (criterion) {
    case PartitionCriterion::Axis: return "i";
    case PartitionCriterion::XiInvariant: return "ii";
    case PartitionCriterion::MuInvariant: return "iii";
  }
  return "?";
}

FreeGraphCheck check_freely_contained(const Configuration& cfg, const PointSet& x) {
  FreeGraphCheck out;
  const auto v = x.members();
  auto fail = [&](FreeGraphClause clause, std::vector<PointIndex> culprits) {
    out.violated = clause;
    out.culprits = std::move(culprits);
    std::ostringstream msg;
    msg << to_string(clause);
    for (PointIndex p : out.culprits) msg << ' ' << p;
    out.diagnostic = msg.str();
    return out;
  };
  if (v.size() < 2) return fail(FreeGraphClause::TooSmall, v);
  FreeGraphWitness w;
  w.vertices = x;
  std::map<PointIndex, std::pair<PointIndex, PointIndex>> third_owner;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const auto line = cfg.line_on(v[i], v[j]);
      if (!line) return fail(FreeGraphClause::NotJoinable, {v[i], v[j]});
      w.pair_lines[{v[i], v[j]}] = *line;
    }
  }
  for (const auto& [pair, line] : w.pair_lines) {
    const PointIndex t = *cfg.third_point(pair.first, pair.second);
    if (x.contains(t)) return fail(FreeGraphClause::CollinearTriple, {pair.first, pair.second, t});
  }
  for (const auto& [pair, line] : w.pair_lines) {
    const PointIndex t = *cfg.third_point(pair.first, pair.second);
    const auto [it, fresh] = third_owner.emplace(t, pair);
    if (!fresh) {
      return fail(FreeGraphClause::OverlappingLines, {it->second.first, it->second.second, pair.first, pair.second});
    }
  }
  out.witness = std::move(w);
  return out;
}

std::optional<FreeGraphWitness> is_freely_contained(const Configuration& cfg, const PointSet& x) {
  return check_freely_contained(cfg, x).witness;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Configuration& cfg, std::size_t size, const SearchBudget& budget)
      : cfg_(cfg), size_(size), counter_(budget, "free graph search"), in_x_(cfg.point_count()),
        thirds_(cfg.point_count()) {}

  std::vector<PointSet> run() {
    std::vector<PointIndex> candidates;
    for (std::size_t p = 0; p < cfg_.point_count(); ++p) {
      if (static_cast<std::size_t>(cfg_.rank(static_cast<PointIndex>(p))) + 1 >= size_) {
        candidates.push_back(static_cast<PointIndex>(p));
      }
    }
    extend(candidates);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void extend(const std::vector<PointIndex>& candidates) {
    counter_.tick();
    if (chosen_.size() == size_) {
      found_.push_back(in_x_);
      return;
    }
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      if (chosen_.size() + (candidates.size() - idx) < size_) break;
      const PointIndex v = candidates[idx];
      if (thirds_.contains(v)) continue;
      std::vector<PointIndex> added;
      bool ok = true;
      for (PointIndex u : chosen_) {
        const PointIndex t = *cfg_.third_point(u, v);
        if (in_x_.contains(t) || thirds_.contains(t)) {
          ok = false;
          break;
        }
        thirds_.insert(t);
        added.push_back(t);
      }
      if (ok) {
        chosen_.push_back(v);
        in_x_.insert(v);
        std::vector<PointIndex> next;
        for (std::size_t k = idx + 1; k < candidates.size(); ++k) {
          const PointIndex w = candidates[k];
          if (!thirds_.contains(w) && cfg_.collinear(v, w)) next.push_back(w);
        }
        extend(next);
        in_x_.erase(v);
        chosen_.pop_back();
      }
      for (PointIndex t : added) thirds_.erase(t);
    }
  }

  const Configuration& cfg_;
  std::size_t size_;
  NodeCounter counter_;
  std::vector<PointIndex> chosen_;
  PointSet in_x_;
  PointSet thirds_;
  std::vector<PointSet> found_;
};

}  // namespace

std::vector<FreeGraphWitness> find_free_complete_graphs(const Configuration& cfg, int size,
                                                        const SearchBudget& budget) {
  if (size < 2) throw Error(ErrorKind::InvalidArgument, "free graph size must be at least 2");
  std::vector<FreeGraphWitness> out;
  for (auto& x : CliqueSearch(cfg, static_cast<std::size_t>(size), budget).run()) {
    auto check = check_freely_contained(cfg, x);
    if (!check.witness) {
      throw Error(ErrorKind::InvariantViolation, "clique search produced a non-free set: " + check.diagnostic);
    }
    out.push_back(std::move(*check.witness));
  }
  return out;
}

int maximal_free_graph_size(const Configuration& cfg, const SearchBudget& budget) {
  const auto report = validate_psts(cfg);
  if (report.is_psts && report.binomial) return report.binomial->order() - 1;
  int best = 0;
  for (int size = 2; size <= static_cast<int>(cfg.point_count()); ++size) {
    if (find_free_complete_graphs(cfg, size, budget).empty()) break;
    best = size;
  }
  return best;
}

GraphComplement graph_complement(const Configuration& cfg, const FreeGraphWitness& x) {
  const auto report = validate_psts(cfg);
  const auto n = static_cast<int>(x.vertices.count());
  if (!report.is_psts || !report.binomial || report.binomial->order() != n + 1) {
    throw Error(ErrorKind::NotBinomialPlusOne,
                "host must be a B(" + std::to_string(n) + ",+1) for a free graph on " + std::to_string(n) + " vertices");
  }
  if (!is_freely_contained(cfg, x.vertices)) {
    throw Error(ErrorKind::InvalidArgument, "witness is not freely contained");
  }
  auto rest = restrict_to(cfg, x.vertices.complement());
  const auto inner = validate_psts(rest.cfg);
  if (!inner.binomial || inner.binomial->order() != n) {
    throw Error(ErrorKind::InvariantViolation, "complement of a free graph is not a B(" + std::to_string(n) + ",0)");
  }
  return {std::move(rest.cfg), std::move(rest.to_parent)};
}

IntersectionReport pairwise_intersections(const Configuration& cfg, std::span<const FreeGraphWitness> witnesses) {
  IntersectionReport out;
  const std::size_t k = witnesses.size();
  out.common.assign(k, std::vector<std::vector<PointIndex>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      out.common[i][j] = (witnesses[i].vertices & witnesses[j].vertices).members();
      if (i < j && out.common[i][j].size() != 1) {
        out.ok = false;
        out.violations.push_back("graphs " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                                 std::to_string(out.common[i][j].size()) + " vertices");
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t c = b + 1; c < k; ++c) {
        const auto& ab = out.common[a][b];
        const auto& ac = out.common[a][c];
        const auto& bc = out.common[b][c];
        if (ab.size() != 1 || ac.size() != 1 || bc.size() != 1) continue;
        const auto t = ab[0] != ac[0] ? cfg.third_point(ab[0], ac[0]) : std::nullopt;
        if (!t || *t != bc[0]) {
          out.ok = false;
          out.violations.push_back("common vertices of graphs " + std::to_string(a) + ", " + std::to_string(b) +
                                   ", " + std::to_string(c) + " are not a line");
        }
      }
    }
  }
  return out;
}

PartitionSpec decompose_hyperplane(const Configuration& cfg, const PointSet& h) {
  const auto ground = pair_ground_set(cfg);
  if (ground.size() > 24) throw Error(ErrorKind::InvalidArgument, "ground set too large to decompose");
  (void)partition_hyperplane(cfg, PartitionSpec{ground, {}});  // label checks
  if (!is_hyperplane(cfg, h)) throw Error(ErrorKind::NotAHyperplane, "set is not a hyperplane");
  std::vector<std::pair<std::size_t, std::size_t>> positions(cfg.point_count());
  for (std::size_t p = 0; p < cfg.point_count(); ++p) {
    const auto& pr = std::get<Pair>(cfg.labels()[p]);
    positions[p] = {static_cast<std::size_t>(std::lower_bound(ground.begin(), ground.end(), pr.x) - ground.begin()),
                    static_cast<std::size_t>(std::lower_bound(ground.begin(), ground.end(), pr.y) - ground.begin())};
  }
  const std::size_t w = ground.size();
  const std::uint32_t all = (std::uint32_t{1} << w) - 1;
  for (std::uint32_t mask = 1; mask < all; ++mask) {
    bool match = true;
    for (std::size_t p = 0; p < cfg.point_count() && match; ++p) {
      const bool same = ((mask >> positions[p].first) & 1u) == ((mask >> positions[p].second) & 1u);
      match = same == h.contains(static_cast<PointIndex>(p));
    }
    if (!match) continue;
    std::uint32_t side = mask;
    const std::uint32_t other = all & ~mask;
    const auto size = std::popcount(side);
    const auto other_size = std::popcount(other);
    if (other_size < size || (other_size == size && (side & 1u))) side = other;
    PartitionSpec spec{ground, {}};
    for (std::size_t i = 0; i < w; ++i) {
      if ((side >> i) & 1u) spec.part.push_back(ground[i]);
    }
    return spec;
  }
  throw Error(ErrorKind::NoDecomposition, "hyperplane is not of the form H(A|W\\A)");
}

DegeneracyReport check_degeneracy(const PerspectiveData& data, const SearchBudget& budget) {
  check_perspective_data(data);
  DegeneracyReport out;
  const std::size_t m = data.m();
  for (std::size_t a = 0; a < data.base.size(); ++a) {
    bool fixed = true;
    for (std::size_t i = 0; i < m && fixed; ++i) {
      for (std::size_t j = 0; j < m && fixed; ++j) {
        fixed = static_cast<std::size_t>(data.xi[i][j][a]) == a;
      }
    }
    if (fixed) out.fixed_points.push_back(data.base[a]);
  }
  out.extra_graphs = !out.fixed_points.empty();
  const auto built = perspective_system(data);
  out.free_graph_size = data.order();
  out.free_graph_count = find_free_complete_graphs(built, out.free_graph_size, budget).size();
  out.consistent = out.extra_graphs ? out.free_graph_count > m : out.free_graph_count == m;
  return out;
}

CriteriaVerdict check_partition_criteria(const PerspectiveData& data, std::span<const int> a) {
  return check_partition_criteria(data, perspective_system(data), a);
}

CriteriaVerdict check_partition_criteria(const PerspectiveData& data, const Configuration& built,
                                         std::span<const int> a) {
  const std::set<int> part(a.begin(), a.end());
  for (int x : part) {
    if (std::find(data.base.begin(), data.base.end(), x) == data.base.end()) {
      throw Error(ErrorKind::InvalidArgument, "A must be a subset of X");
    }
  }
  auto mono = [&](const Pair& pr) { return part.contains(pr.x) == part.contains(pr.y); };
  const auto lambda = axis_pair_labels(data);
  const std::size_t nx = data.base.size();
  CriteriaVerdict out;

  bool axis_ok = true;
  if (part.size() != nx) {
    PointSet on_axis(data.axis.point_count());
    for (std::size_t p = 0; p < lambda.size(); ++p) {
      if (mono(lambda[p])) on_axis.insert(static_cast<PointIndex>(p));
    }
    axis_ok = is_hyperplane(data.axis, on_axis);
  }
  if (!axis_ok) out.failed.push_back(PartitionCriterion::Axis);

  bool xi_ok = true;
  for (std::size_t i = 0; i < data.m() && xi_ok; ++i) {
    for (std::size_t j = 0; j < data.m() && xi_ok; ++j) {
      for (std::size_t pos = 0; pos < nx && xi_ok; ++pos) {
        if (part.contains(data.base[pos])) {
          xi_ok = part.contains(data.base[static_cast<std::size_t>(data.xi[i][j][pos])]);
        }
      }
    }
  }
  if (!xi_ok) out.failed.push_back(PartitionCriterion::XiInvariant);

  bool mu_ok = true;
  for (std::size_t i = 0; i < data.m() && mu_ok; ++i) {
    for (std::size_t x = 0; x < nx && mu_ok; ++x) {
      for (std::size_t y = x + 1; y < nx && mu_ok; ++y) {
        const Pair pr(data.base[x], data.base[y]);
        const auto image = static_cast<std::size_t>(data.mu[i][pair_position(nx, x, y)]);
        mu_ok = mono(pr) == mono(lambda[image]);
      }
    }
  }
  if (!mu_ok) out.failed.push_back(PartitionCriterion::MuInvariant);

  out.hyperplane = out.failed.empty();
  out.direct = is_hyperplane(built, partition_hyperplane(built, std::vector<int>(part.begin(), part.end())));
  return out;
}

}  // namespace bsts
