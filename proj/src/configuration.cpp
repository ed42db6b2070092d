#include "bsts/configuration.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace bsts {

// ---------------------------------------------------------------------------
// Labels

Pair::Pair(int a, int b) : x(std::min(a, b)), y(std::max(a, b)) {
  if (a == b) throw Error(ErrorKind::InvalidArgument, "pair label needs two distinct elements", {a});
}

namespace {

constexpr std::array<char, 3> kLetters = {'a', 'b', 'c'};

struct LabelPrinter {
  std::string operator()(const Atom& a) const { return a.name; }
  std::string operator()(const Pair& p) const {
    return "{" + std::to_string(p.x) + "," + std::to_string(p.y) + "}";
  }
  std::string operator()(const Multiset& m) const {
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
      out += kLetters[i];
      out += '^';
      out += std::to_string(m.exponents[i]);
    }
    return out;
  }
  std::string operator()(const Tuple& t) const {
    return "(" + std::to_string(t.x) + "," + std::to_string(t.i) + ")";
  }
};

// Reads an optionally signed integer at `pos`, advancing it.
bool read_int(std::string_view s, std::size_t& pos, int& value) {
  const char* first = s.data() + pos;
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) return false;
  pos += static_cast<std::size_t>(ptr - first);
  return true;
}

bool expect(std::string_view s, std::size_t& pos, char c) {
  if (pos < s.size() && s[pos] == c) {
    ++pos;
    return true;
  }
  return false;
}

std::optional<PointLabel> parse_pair_or_tuple(std::string_view s) {
  const char open = s.front();
  const char close = open == '{' ? '}' : ')';
  std::size_t pos = 1;
  int a = 0;
  int b = 0;
  if (!read_int(s, pos, a) || !expect(s, pos, ',') || !read_int(s, pos, b) ||
      !expect(s, pos, close) || pos != s.size()) {
    return std::nullopt;
  }
  if (open == '{') {
    if (a == b) return std::nullopt;
    return PointLabel{Pair(a, b)};
  }
  return PointLabel{Tuple{a, b}};
}

std::optional<PointLabel> parse_multiset(std::string_view s) {
  Multiset m;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!expect(s, pos, kLetters[i]) || !expect(s, pos, '^')) return std::nullopt;
    if (pos < s.size() && s[pos] == '-') return std::nullopt;
    if (!read_int(s, pos, m.exponents[i])) return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;
  return PointLabel{m};
}

}  // namespace

std::string to_string(const PointLabel& label) { return std::visit(LabelPrinter{}, label); }

PointLabel parse_label(std::string_view text) {
  if (!text.empty()) {
    if (text.front() == '{' || text.front() == '(') {
      if (auto l = parse_pair_or_tuple(text)) return *l;
    } else if (text.front() == 'a') {
      if (auto l = parse_multiset(text)) return *l;
    }
  }
  return Atom{std::string(text)};
}

// ---------------------------------------------------------------------------
// Binomial types

long long binomial(long long n, long long k) noexcept {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long BinomialType::points() const noexcept { return binomial(order(), 2); }
long long BinomialType::lines() const noexcept { return binomial(order(), 3); }

std::string to_string(const BinomialType& type) {
  std::ostringstream out;
  out << "B(" << type.n << ',';
  if (type.delta > 0) out << '+';
  out << type.delta << ')';
  return out.str();
}

std::optional<BinomialType> binomial_type_of(std::size_t points, std::size_t lines, int rank) {
  for (int m = 2; binomial(m, 2) <= static_cast<long long>(points); ++m) {
    if (binomial(m, 2) == static_cast<long long>(points)) {
      if (binomial(m, 3) == static_cast<long long>(lines) && rank == m - 2) {
        return BinomialType{m, 0};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Configuration

Configuration::Configuration(std::vector<PointLabel> labels, std::vector<Line> lines)
    : labels_(std::move(labels)) {
  const auto n = static_cast<int>(labels_.size());
  {
    std::map<PointLabel, int> seen;
    for (int p = 0; p < n; ++p) {
      auto [it, fresh] = seen.emplace(labels_[static_cast<std::size_t>(p)], p);
      if (!fresh) {
        throw Error(ErrorKind::DuplicateLabel, "label '" + to_string(it->first) + "' repeated",
                    {it->second, p});
      }
    }
  }
  for (auto& l : lines) {
    for (PointIndex p : l) {
      if (p < 0 || p >= n) {
        throw Error(ErrorKind::IndexOutOfRange, "line refers to a missing point", {p});
      }
    }
    std::sort(l.begin(), l.end());
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  lines_ = std::move(lines);

  incidence_.assign(labels_.size(), {});
  join_.assign(labels_.size() * labels_.size(), -1);
  for (std::size_t li = 0; li < lines_.size(); ++li) {
    const auto& l = lines_[li];
    for (std::size_t a = 0; a < 3; ++a) {
      if (a > 0 && l[a] == l[a - 1]) continue;
      incidence_[static_cast<std::size_t>(l[a])].push_back(static_cast<int>(li));
    }
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        if (l[a] == l[b]) continue;
        auto& slot = join_[static_cast<std::size_t>(l[a]) * labels_.size() + static_cast<std::size_t>(l[b])];
        if (slot < 0) slot = static_cast<int>(li);
      }
    }
  }
}

Configuration Configuration::unlabeled(std::size_t points, std::vector<Line> lines) {
  std::vector<PointLabel> labels;
  labels.reserve(points);
  for (std::size_t i = 0; i < points; ++i) labels.emplace_back(Atom{std::to_string(i)});
  return Configuration(std::move(labels), std::move(lines));
}

std::optional<int> Configuration::line_on(PointIndex p, PointIndex q) const {
  const auto n = labels_.size();
  if (p < 0 || q < 0 || static_cast<std::size_t>(p) >= n || static_cast<std::size_t>(q) >= n || p == q) {
    return std::nullopt;
  }
  const int li = join_[static_cast<std::size_t>(p) * n + static_cast<std::size_t>(q)];
  if (li < 0) return std::nullopt;
  return li;
}

std::optional<PointIndex> Configuration::third_point(PointIndex p, PointIndex q) const {
  auto li = line_on(p, q);
  if (!li) return std::nullopt;
  for (PointIndex r : lines_[static_cast<std::size_t>(*li)]) {
    if (r != p && r != q) return r;
  }
  return std::nullopt;
}

std::optional<PointIndex> Configuration::find_label(const PointLabel& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<PointIndex>(it - labels_.begin());
}

PointSet Configuration::line_set(std::size_t i) const {
  const auto& l = lines_.at(i);
  return PointSet::of(point_count(), {l[0], l[1], l[2]});
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_psts(const Configuration& cfg) {
  ValidationReport report;
  const auto& lines = cfg.lines();
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const auto& l = lines[li];
    if (l[0] == l[1] || l[1] == l[2]) {
      report.issue = ValidationIssue{ErrorKind::BadLineSize,
                                     {l[0], l[1], l[2]},
                                     "line " + std::to_string(li) + " has fewer than 3 distinct points"};
      return report;
    }
  }
  std::map<std::pair<int, int>, std::size_t> joins;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const auto& l = lines[li];
    const std::array<std::pair<int, int>, 3> pairs = {{{l[0], l[1]}, {l[0], l[2]}, {l[1], l[2]}}};
    for (const auto& pr : pairs) {
      auto [it, fresh] = joins.emplace(pr, li);
      if (!fresh) {
        report.issue = ValidationIssue{
            ErrorKind::DuplicatePair,
            {pr.first, pr.second},
            "points " + std::to_string(pr.first) + " and " + std::to_string(pr.second) +
                " lie on two lines"};
        return report;
      }
    }
  }
  const int n = static_cast<int>(cfg.point_count());
  const int rank = n > 0 ? cfg.rank(0) : 0;
  for (PointIndex p = 1; p < n; ++p) {
    if (cfg.rank(p) != rank) {
      report.issue = ValidationIssue{ErrorKind::NonUniformRank,
                                     {0, p},
                                     "point " + std::to_string(p) + " has rank " +
                                         std::to_string(cfg.rank(p)) + ", point 0 has rank " +
                                         std::to_string(rank)};
      return report;
    }
  }
  report.is_psts = true;
  report.rank = rank;
  report.binomial = binomial_type_of(cfg.point_count(), cfg.line_count(), rank);
  return report;
}

ValidationReport require_psts(const Configuration& cfg) {
  auto report = validate_psts(cfg);
  if (!report.is_psts) {
    throw Error(report.issue->kind, report.issue->message, report.issue->indices);
  }
  return report;
}

Configuration make_psts(std::vector<PointLabel> labels, std::vector<Line> lines) {
  Configuration cfg(std::move(labels), std::move(lines));
  require_psts(cfg);
  return cfg;
}

// ---------------------------------------------------------------------------
// Predicates

namespace {

void require_width(const Configuration& cfg, const PointSet& y) {
  if (y.width() != cfg.point_count()) {
    throw Error(ErrorKind::WidthMismatch, "point set width differs from configuration size",
                {static_cast<int>(y.width()), static_cast<int>(cfg.point_count())});
  }
}

int members_on(const Line& l, const PointSet& y) {
  return int{y.contains(l[0])} + int{y.contains(l[1])} + int{y.contains(l[2])};
}

}  // namespace

bool is_subspace(const Configuration& cfg, const PointSet& y) {
  require_width(cfg, y);
  return std::none_of(cfg.lines().begin(), cfg.lines().end(),
                      [&](const Line& l) { return members_on(l, y) == 2; });
}

bool is_hyperplane(const Configuration& cfg, const PointSet& h) {
  require_width(cfg, h);
  if (h.is_full()) return false;
  // A proper subspace meeting every line: each line holds one or three points.
  return std::all_of(cfg.lines().begin(), cfg.lines().end(), [&](const Line& l) {
    const int k = members_on(l, h);
    return k == 1 || k == 3;
  });
}

PointSet subspace_closure(const Configuration& cfg, PointSet y) {
  require_width(cfg, y);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& l : cfg.lines()) {
      if (members_on(l, y) == 2) {
        for (PointIndex p : l) y.insert(p);
        changed = true;
      }
    }
  }
  return y;
}

Restriction restrict_to(const Configuration& cfg, const PointSet& y) {
  require_width(cfg, y);
  Restriction out;
  out.to_parent = y.members();
  std::vector<int> to_child(cfg.point_count(), -1);
  std::vector<PointLabel> labels;
  labels.reserve(out.to_parent.size());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    to_child[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);
    labels.push_back(cfg.label(out.to_parent[i]));
  }
  std::vector<Line> lines;
  for (const auto& l : cfg.lines()) {
    if (members_on(l, y) == 3) {
      lines.push_back({to_child[static_cast<std::size_t>(l[0])], to_child[static_cast<std::size_t>(l[1])],
                       to_child[static_cast<std::size_t>(l[2])]});
    }
  }
  out.cfg = Configuration(std::move(labels), std::move(lines));
  return out;
}

std::vector<int> pair_ground_set(const Configuration& cfg) {
  std::set<int> ground;
  for (std::size_t p = 0; p < cfg.point_count(); ++p) {
    const auto* pair = std::get_if<Pair>(&cfg.labels()[p]);
    if (!pair) {
      throw Error(ErrorKind::LabelsNotPairs, "point " + std::to_string(p) + " is not labelled by a pair",
                  {static_cast<int>(p)});
    }
    ground.insert(pair->x);
    ground.insert(pair->y);
  }
  return {ground.begin(), ground.end()};
}

PointSet star(const Configuration& cfg, int element) {
  pair_ground_set(cfg);
  PointSet s = cfg.empty_set();
  for (std::size_t p = 0; p < cfg.point_count(); ++p) {
    if (std::get<Pair>(cfg.labels()[p]).contains(element)) s.insert(static_cast<PointIndex>(p));
  }
  return s;
}

Configuration permute(const Configuration& cfg, std::span<const PointIndex> perm) {
  const auto n = cfg.point_count();
  if (perm.size() != n) throw Error(ErrorKind::SizeMismatch, "permutation length differs from point count");
  std::vector<PointLabel> labels(n);
  std::vector<bool> hit(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    const auto q = static_cast<std::size_t>(perm[p]);
    if (q >= n || hit[q]) throw Error(ErrorKind::InvalidArgument, "not a permutation");
    hit[q] = true;
    labels[q] = cfg.labels()[p];
  }
  std::vector<Line> lines;
  lines.reserve(cfg.line_count());
  for (const auto& l : cfg.lines()) {
    lines.push_back({perm[static_cast<std::size_t>(l[0])], perm[static_cast<std::size_t>(l[1])],
                     perm[static_cast<std::size_t>(l[2])]});
  }
  return Configuration(std::move(labels), std::move(lines));
}

}  // namespace bsts
