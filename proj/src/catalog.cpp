#include "bsts/catalog.hpp"

#include <algorithm>
#include <map>

#include "bsts/constructors.hpp"
#include "bsts/hyperplanes.hpp"
#include "bsts/subgraphs.hpp"
#include "catalog_fixtures.hpp"

namespace bsts {

GeometrySignature canonical_form(const Configuration& cfg, const SearchBudget& budget) {
  GeometrySignature sig;
  sig.certificate = canonical_certificate(cfg);
  auto& s = sig.summary;
  s.points = cfg.point_count();
  s.lines = cfg.line_count();
  s.rank = cfg.point_count() == 0 ? 0 : cfg.rank(0);
  for (std::size_t p = 1; p < cfg.point_count(); ++p) {
    if (cfg.rank(static_cast<PointIndex>(p)) != s.rank) s.rank = -1;
  }
  s.hyperplanes = enumerate_hyperplanes(cfg, budget).size();
  s.free_graph_size = maximal_free_graph_size(cfg, budget);
  s.free_graphs = s.free_graph_size >= 2 ? find_free_complete_graphs(cfg, s.free_graph_size, budget).size() : 0;
  return sig;
}

namespace {

class CensusSearch {
 public:
  CensusSearch(int n, const SearchBudget& budget)
      : points_(static_cast<std::size_t>(binomial(n, 2))),
        rank_(n - 2),
        counter_(budget, "binomial census"),
        degree_(points_, 0),
        last_q_(points_, -1),
        joined_(points_ * points_, 0) {}

  CensusResult run() {
    for (int t = 0; t < rank_; ++t) add({0, 2 * t + 1, 2 * t + 2});
    dfs();
    CensusResult out;
    for (auto& [cert, cfg] : found_) {
      out.classes.push_back({canonical_form(cfg), std::move(cfg)});
    }
    out.completions = completions_;
    out.nodes = counter_.used();
    return out;
  }

 private:
  bool joined(int a, int b) const { return joined_[static_cast<std::size_t>(a) * points_ + static_cast<std::size_t>(b)] != 0; }
  void set_joined(int a, int b, char v) {
    joined_[static_cast<std::size_t>(a) * points_ + static_cast<std::size_t>(b)] = v;
    joined_[static_cast<std::size_t>(b) * points_ + static_cast<std::size_t>(a)] = v;
  }
  bool open(int p) const { return degree_[static_cast<std::size_t>(p)] < rank_; }

  void add(const Line& l) {
    lines_.push_back(l);
    for (int i = 0; i < 3; ++i) {
      ++degree_[static_cast<std::size_t>(l[static_cast<std::size_t>(i)])];
      for (int j = i + 1; j < 3; ++j) set_joined(l[static_cast<std::size_t>(i)], l[static_cast<std::size_t>(j)], 1);
    }
  }
  void remove_last() {
    const Line l = lines_.back();
    lines_.pop_back();
    for (int i = 0; i < 3; ++i) {
      --degree_[static_cast<std::size_t>(l[static_cast<std::size_t>(i)])];
      for (int j = i + 1; j < 3; ++j) set_joined(l[static_cast<std::size_t>(i)], l[static_cast<std::size_t>(j)], 0);
    }
  }

  void dfs() {
    counter_.tick();
    const int n = static_cast<int>(points_);
    int p = 0;
    while (p < n && !open(p)) ++p;
    if (p == n) {
      ++completions_;
      auto cfg = canonical_copy(Configuration::unlabeled(points_, lines_));
      auto cert = canonical_certificate(cfg);
      found_.try_emplace(std::move(cert), std::move(cfg));
      return;
    }
    // Every open point after p that p may still be joined with.
    std::vector<int> partners;
    for (int q = p + 1; q < n; ++q) {
      if (open(q) && !joined(p, q)) partners.push_back(q);
    }
    if (static_cast<int>(partners.size()) < 2 * (rank_ - degree_[static_cast<std::size_t>(p)])) return;
    const int saved = last_q_[static_cast<std::size_t>(p)];
    for (std::size_t a = 0; a < partners.size(); ++a) {
      const int q = partners[a];
      if (q <= saved) continue;
      for (std::size_t b = a + 1; b < partners.size(); ++b) {
        const int r = partners[b];
        if (joined(q, r)) continue;
        add({p, q, r});
        last_q_[static_cast<std::size_t>(p)] = q;
        dfs();
        last_q_[static_cast<std::size_t>(p)] = saved;
        remove_last();
      }
    }
  }

  std::size_t points_;
  int rank_;
  NodeCounter counter_;
  std::vector<int> degree_;
  std::vector<int> last_q_;
  std::vector<char> joined_;
  std::vector<Line> lines_;
  std::map<Certificate, Configuration> found_;
  std::uint64_t completions_ = 0;
};

}  // namespace

CensusResult generate_all_binomial(int n, const SearchBudget& budget) {
  if (n < 2 || n > 6) throw Error(ErrorKind::BadSize, "census covers 2 <= n <= 6");
  return CensusSearch(n, budget).run();
}

std::size_t veblen_count(const Configuration& cfg) {
  const std::size_t n = cfg.point_count();
  if (n > 64) throw Error(ErrorKind::InvalidArgument, "Veblen count is limited to 64 points");
  std::vector<std::uint64_t> masks;
  for (const auto& l : cfg.lines()) {
    masks.push_back((std::uint64_t{1} << l[0]) | (std::uint64_t{1} << l[1]) | (std::uint64_t{1} << l[2]));
  }
  std::size_t count = 0;
  std::vector<int> pick;
  auto visit = [&](auto&& self, int from, std::uint64_t subset) -> void {
    if (pick.size() == 6) {
      std::vector<int> degree(6, 0);
      int inside = 0;
      for (auto m : masks) {
        if ((m & subset) != m) continue;
        ++inside;
        for (std::size_t i = 0; i < 6; ++i) {
          if ((m >> pick[i]) & 1u) ++degree[i];
        }
      }
      if (inside == 4 && std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; })) ++count;
      return;
    }
    for (int p = from; p < static_cast<int>(n); ++p) {
      pick.push_back(p);
      self(self, p + 1, subset | (std::uint64_t{1} << p));
      pick.pop_back();
    }
  };
  visit(visit, 0, 0);
  return count;
}

CatalogExpectation compute_expectation(const Configuration& cfg, const SearchBudget& budget) {
  CatalogExpectation e;
  e.hyperplane_count = enumerate_hyperplanes(cfg, budget).size();
  e.veblen_count = veblen_count(cfg);
  e.free_k4_count = find_free_complete_graphs(cfg, 4, budget).size();
  e.labeled_veldkamp_summary = labeled_veldkamp(cfg, budget).summary();
  return e;
}

void verify_entry(const CatalogEntry& entry, const SearchBudget& budget) {
  auto mismatch = [&](const std::string& field, const std::string& stored, const std::string& computed) {
    throw Error(ErrorKind::FixtureMismatch,
                entry.name + ": " + field + " stored " + stored + ", recomputed " + computed);
  };
  const auto report = validate_psts(entry.cfg);
  if (!report.is_psts || !report.binomial || report.binomial->order() != 5) {
    mismatch("shape", "10_3", report.issue ? report.issue->message : "not a 10_3");
  }
  const auto e = compute_expectation(entry.cfg, budget);
  const auto& s = entry.expected;
  if (e.hyperplane_count != s.hyperplane_count) {
    mismatch("hyperplane_count", std::to_string(s.hyperplane_count), std::to_string(e.hyperplane_count));
  }
  if (e.veblen_count != s.veblen_count) {
    mismatch("veblen_count", std::to_string(s.veblen_count), std::to_string(e.veblen_count));
  }
  if (e.free_k4_count != s.free_k4_count) {
    mismatch("free_K4_count", std::to_string(s.free_k4_count), std::to_string(e.free_k4_count));
  }
  if (e.labeled_veldkamp_summary != s.labeled_veldkamp_summary) {
    mismatch("labeled_veldkamp_summary", s.labeled_veldkamp_summary, e.labeled_veldkamp_summary);
  }
}

std::vector<CatalogEntry> catalog_103_unverified() {
  std::vector<CatalogEntry> out;
  for (const auto& f : detail::catalog_fixtures()) {
    CatalogEntry entry;
    entry.name = f.name;
    if (entry.name == "desargues") {
      entry.cfg = desargues(5);
    } else if (entry.name == "kantor") {
      entry.cfg = veronesian(3);
    } else {
      std::vector<Line> lines(f.lines.begin(), f.lines.end());
      entry.cfg = Configuration::unlabeled(10, std::move(lines));
      require_psts(entry.cfg);
    }
    entry.expected = f.expected;
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CatalogEntry> catalog_103() {
  auto entries = catalog_103_unverified();
  for (const auto& e : entries) verify_entry(e);
  return entries;
}

}  // namespace bsts
