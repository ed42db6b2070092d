#include "bsts/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace bsts {

namespace {

// Collects lines over labels, then numbers points in label order.
class LabeledBuilder {
 public:
  void add_point(const PointLabel& label) { points_.insert(label); }

  void add_line(const PointLabel& a, const PointLabel& b, const PointLabel& c) {
    add_point(a);
    add_point(b);
    add_point(c);
    lines_.push_back({a, b, c});
  }

  Configuration build() const {
    std::vector<PointLabel> labels(points_.begin(), points_.end());
    std::map<PointLabel, PointIndex> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<PointIndex>(i));
    std::vector<Line> lines;
    lines.reserve(lines_.size());
    for (const auto& l : lines_) lines.push_back({index.at(l[0]), index.at(l[1]), index.at(l[2])});
    return make_psts(std::move(labels), std::move(lines));
  }

 private:
  std::set<PointLabel> points_;
  std::vector<std::array<PointLabel, 3>> lines_;
};

PointLabel pair_label(int a, int b) { return Pair(a, b); }

std::vector<int> iota_vector(int first, int count) {
  std::vector<int> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), first);
  return v;
}

void require_binomial_order(const Configuration& cfg, int order, const char* what) {
  const auto report = validate_psts(cfg);
  if (!report.is_psts || !report.binomial || report.binomial->order() != order) {
    throw Error(ErrorKind::ValidationFailed,
                std::string(what) + " is not a B(" + std::to_string(order) + ",0) configuration");
  }
}

}  // namespace

std::size_t pair_position(std::size_t base_size, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  // Pairs starting at 0..a-1 come first.
  return a * base_size - a * (a + 1) / 2 + (b - a - 1);
}

Configuration grassmannian(std::span<const int> base) {
  std::vector<int> x(base.begin(), base.end());
  std::sort(x.begin(), x.end());
  LabeledBuilder builder;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = a + 1; b < x.size(); ++b) builder.add_point(pair_label(x[a], x[b]));
  }
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      for (std::size_t c = b + 1; c < x.size(); ++c) {
        builder.add_line(pair_label(x[a], x[b]), pair_label(x[a], x[c]), pair_label(x[b], x[c]));
      }
    }
  }
  return builder.build();
}

Configuration desargues(int n) {
  if (n < 3) throw Error(ErrorKind::BadSize, "generalized Desargues configuration needs n >= 3", {n});
  const auto base = iota_vector(1, n);
  return grassmannian(base);
}

Configuration quasi_grassmannian(int n) {
  if (n < 4) throw Error(ErrorKind::BadSize, "quasi Grassmannian needs n >= 4", {n});
  const int k = n / 2;
  const bool odd = n % 2 == 1;
  const auto x = iota_vector(odd ? 0 : 1, odd ? 2 * k + 1 : 2 * k);
  LabeledBuilder builder;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = a + 1; b < x.size(); ++b) builder.add_point(pair_label(x[a], x[b]));
  }
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      for (std::size_t c = b + 1; c < x.size(); ++c) {
        const std::set<int> z = {x[a], x[b], x[c]};
        const bool through_special = z.contains(1) && z.contains(2);
        // For odd n the triangle on X0 = {0,1,2} is the line of G(X0, 2) and stays.
        if (through_special && !(odd && z.contains(0))) continue;
        builder.add_line(pair_label(x[a], x[b]), pair_label(x[a], x[c]), pair_label(x[b], x[c]));
      }
    }
  }
  for (int j = 1; j <= k - 1; ++j) {
    builder.add_line(pair_label(1, 2), pair_label(1, 2 * j + 2), pair_label(2, 2 * j + 1));
    builder.add_line(pair_label(1, 2), pair_label(1, 2 * j + 1), pair_label(2, 2 * j + 2));
  }
  return builder.build();
}

// ---------------------------------------------------------------------------

bool GraphOnX::has_edge(int a, int b) const {
  if (a == b) return false;
  return std::find(edges.begin(), edges.end(), Pair(a, b)) != edges.end();
}

GraphOnX GraphOnX::empty(std::span<const int> vertices) {
  GraphOnX g;
  g.vertices.assign(vertices.begin(), vertices.end());
  std::sort(g.vertices.begin(), g.vertices.end());
  return g;
}

GraphOnX GraphOnX::complete(std::span<const int> vertices) {
  GraphOnX g = empty(vertices);
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) g.edges.emplace_back(g.vertices[a], g.vertices[b]);
  }
  return g;
}

Configuration multi_veblen(const GraphOnX& graph, std::array<int, 2> p) {
  std::vector<int> x = graph.vertices;
  std::sort(x.begin(), x.end());
  if (x.size() < 2) throw Error(ErrorKind::BadSize, "multi-veblen needs |X| >= 2", {static_cast<int>(x.size())});
  if (std::adjacent_find(x.begin(), x.end()) != x.end()) {
    throw Error(ErrorKind::InvalidArgument, "repeated vertex in X");
  }
  for (int s : p) {
    if (std::binary_search(x.begin(), x.end(), s)) {
      throw Error(ErrorKind::OverlapError, "base pair meets X", {s});
    }
  }
  if (p[0] == p[1]) throw Error(ErrorKind::InvalidArgument, "base pair needs two elements");
  for (const auto& e : graph.edges) {
    if (!std::binary_search(x.begin(), x.end(), e.x) || !std::binary_search(x.begin(), x.end(), e.y)) {
      throw Error(ErrorKind::InvalidArgument, "edge outside the vertex set", {e.x, e.y});
    }
  }
  const int a = p[0];
  const int b = p[1];
  LabeledBuilder builder;
  for (int i : x) builder.add_line(pair_label(a, b), pair_label(a, i), pair_label(b, i));
  for (std::size_t u = 0; u < x.size(); ++u) {
    for (std::size_t v = u + 1; v < x.size(); ++v) {
      const int i = x[u];
      const int j = x[v];
      if (graph.has_edge(i, j)) {
        builder.add_line(pair_label(a, i), pair_label(a, j), pair_label(i, j));
        builder.add_line(pair_label(b, i), pair_label(b, j), pair_label(i, j));
      } else {
        builder.add_line(pair_label(a, i), pair_label(b, j), pair_label(i, j));
        builder.add_line(pair_label(b, i), pair_label(a, j), pair_label(i, j));
      }
      for (std::size_t w = v + 1; w < x.size(); ++w) {
        builder.add_line(pair_label(i, j), pair_label(i, x[w]), pair_label(j, x[w]));
      }
    }
  }
  return builder.build();
}

Configuration multi_veblen(const GraphOnX& graph) {
  const int top = graph.vertices.empty() ? 0 : *std::max_element(graph.vertices.begin(), graph.vertices.end());
  return multi_veblen(graph, {top + 1, top + 2});
}

Configuration veronesian(int k) {
  if (k < 1) throw Error(ErrorKind::BadSize, "Veronesian needs k >= 1", {k});
  LabeledBuilder builder;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; i + j <= k; ++j) builder.add_point(Multiset{{i, j, k - i - j}});
  }
  for (int step = 1; step <= k; ++step) {
    const int rest = k - step;
    for (int i = 0; i <= rest; ++i) {
      for (int j = 0; i + j <= rest; ++j) {
        const int m = rest - i - j;
        builder.add_line(Multiset{{i + step, j, m}}, Multiset{{i, j + step, m}}, Multiset{{i, j, m + step}});
      }
    }
  }
  return builder.build();
}

Configuration dual_veronesian(int n) {
  if (n < 2) throw Error(ErrorKind::BadSize, "dual Veronesian needs n >= 2", {n});
  const auto x = iota_vector(1, n);
  return multi_veblen(GraphOnX::empty(x));
}

Configuration graph_sum(int n, const Configuration& core, std::span<const PointIndex> mu) {
  if (n < 2) throw Error(ErrorKind::BadSize, "graph sum needs |X| >= 2", {n});
  const auto pairs = static_cast<std::size_t>(binomial(n, 2));
  if (core.point_count() != pairs || mu.size() != pairs) {
    throw Error(ErrorKind::SizeMismatch, "core and mu must have C(n,2) entries",
                {static_cast<int>(core.point_count()), static_cast<int>(mu.size())});
  }
  std::vector<int> preimage(pairs, -1);
  for (std::size_t q = 0; q < pairs; ++q) {
    const auto v = mu[q];
    if (v < 0 || static_cast<std::size_t>(v) >= pairs || preimage[static_cast<std::size_t>(v)] >= 0) {
      throw Error(ErrorKind::MuNotBijective, "mu is not a bijection onto the core points", {v});
    }
    preimage[static_cast<std::size_t>(v)] = static_cast<int>(q);
  }
  // Label of core point v is the pair mapped onto it.
  std::vector<PointLabel> core_label(pairs);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const auto q = pair_position(static_cast<std::size_t>(n), static_cast<std::size_t>(a - 1),
                                   static_cast<std::size_t>(b - 1));
      core_label[static_cast<std::size_t>(mu[q])] = pair_label(a, b);
    }
  }
  LabeledBuilder builder;
  for (const auto& l : core.lines()) {
    builder.add_line(core_label[static_cast<std::size_t>(l[0])], core_label[static_cast<std::size_t>(l[1])],
                     core_label[static_cast<std::size_t>(l[2])]);
  }
  for (const auto& label : core_label) builder.add_point(label);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) builder.add_line(pair_label(0, a), pair_label(0, b), pair_label(a, b));
  }
  Configuration out = builder.build();
  require_binomial_order(out, n + 1, "graph sum");
  return out;
}

// ---------------------------------------------------------------------------
// Systems of perspectives

namespace {

bool is_permutation_of_positions(const std::vector<int>& perm, std::size_t size) {
  if (perm.size() != size) return false;
  std::vector<bool> hit(size, false);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= size || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

[[noreturn]] void invariant_violation(const std::string& what, std::vector<int> where = {}) {
  throw Error(ErrorKind::InvariantViolation, what, std::move(where));
}

}  // namespace

void check_perspective_data(const PerspectiveData& data) {
  const auto m = data.indices.size();
  const auto nx = data.base.size();
  if (m == 0) invariant_violation("index set I is empty");
  if (nx < 2) invariant_violation("base set X needs at least two elements");
  std::set<int> all(data.indices.begin(), data.indices.end());
  if (all.size() != m) invariant_violation("repeated element in I");
  for (int x : data.base) {
    if (!all.insert(x).second) invariant_violation("X and I must be disjoint and without repeats", {x});
  }
  const auto pairs = static_cast<std::size_t>(binomial(static_cast<long long>(nx), 2));
  if (data.axis.point_count() != pairs) {
    invariant_violation("axis must have C(|X|,2) points",
                        {static_cast<int>(data.axis.point_count()), static_cast<int>(pairs)});
  }
  const auto axis_report = validate_psts(data.axis);
  if (!axis_report.is_psts || !axis_report.binomial || axis_report.binomial->order() != static_cast<int>(nx)) {
    invariant_violation("axis is not a B(|X|,0) configuration");
  }
  if (data.mu.size() != m) invariant_violation("mu needs one bijection per index");
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> as_int(data.mu[i].begin(), data.mu[i].end());
    if (!is_permutation_of_positions(as_int, pairs)) {
      invariant_violation("mu_i is not a bijection onto the axis points", {static_cast<int>(i)});
    }
  }
  if (data.xi.size() != m) invariant_violation("xi must be an |I| x |I| table");
  for (std::size_t i = 0; i < m; ++i) {
    if (data.xi[i].size() != m) invariant_violation("xi must be an |I| x |I| table");
    for (std::size_t j = 0; j < m; ++j) {
      if (!is_permutation_of_positions(data.xi[i][j], nx)) {
        invariant_violation("xi(i,j) is not a permutation of X", {static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < nx; ++a) {
      if (data.xi[i][i][a] != static_cast<int>(a)) invariant_violation("xi(i,i) is not the identity", {static_cast<int>(i)});
    }
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t a = 0; a < nx; ++a) {
        const auto image = static_cast<std::size_t>(data.xi[i][j][a]);
        if (data.xi[j][i][image] != static_cast<int>(a)) {
          invariant_violation("xi(i,j) is not the inverse of xi(j,i)", {static_cast<int>(i), static_cast<int>(j)});
        }
      }
    }
  }
}

std::vector<Pair> axis_pair_labels(const PerspectiveData& data) {
  const auto nx = data.base.size();
  const std::set<int> base(data.base.begin(), data.base.end());
  std::vector<Pair> out(data.axis.point_count());
  bool native = true;
  for (std::size_t p = 0; p < data.axis.point_count() && native; ++p) {
    const auto* pr = std::get_if<Pair>(&data.axis.labels()[p]);
    if (!pr || !base.contains(pr->x) || !base.contains(pr->y)) {
      native = false;
    } else {
      out[p] = *pr;
    }
  }
  if (native) return out;
  for (std::size_t a = 0; a < nx; ++a) {
    for (std::size_t b = a + 1; b < nx; ++b) {
      out[static_cast<std::size_t>(data.mu[0][pair_position(nx, a, b)])] = Pair(data.base[a], data.base[b]);
    }
  }
  return out;
}

Configuration perspective_system(const PerspectiveData& data) {
  check_perspective_data(data);
  const auto m = data.indices.size();
  const auto nx = data.base.size();
  const auto axis_labels = axis_pair_labels(data);
  LabeledBuilder builder;
  for (const auto& l : data.axis.lines()) {
    builder.add_line(axis_labels[static_cast<std::size_t>(l[0])], axis_labels[static_cast<std::size_t>(l[1])],
                     axis_labels[static_cast<std::size_t>(l[2])]);
  }
  for (const auto& pr : axis_labels) builder.add_point(pr);
  const auto& idx = data.indices;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t l = j + 1; l < m; ++l) {
        builder.add_line(pair_label(idx[i], idx[j]), pair_label(idx[i], idx[l]), pair_label(idx[j], idx[l]));
      }
      for (std::size_t a = 0; a < nx; ++a) {
        const auto image = static_cast<std::size_t>(data.xi[i][j][a]);
        builder.add_line(pair_label(idx[i], idx[j]), pair_label(data.base[a], idx[i]),
                         pair_label(data.base[image], idx[j]));
      }
    }
    for (std::size_t a = 0; a < nx; ++a) {
      for (std::size_t b = a + 1; b < nx; ++b) {
        const auto axis_point = static_cast<std::size_t>(data.mu[i][pair_position(nx, a, b)]);
        builder.add_line(pair_label(data.base[a], idx[i]), pair_label(data.base[b], idx[i]), axis_labels[axis_point]);
      }
    }
  }
  Configuration out = builder.build();
  require_binomial_order(out, data.order() + 1, "system of perspectives");
  return out;
}

namespace {

std::vector<PointIndex> identity_mu(const Configuration& axis, std::span<const int> base) {
  const auto nx = base.size();
  std::vector<PointIndex> mu(axis.point_count());
  for (std::size_t a = 0; a < nx; ++a) {
    for (std::size_t b = a + 1; b < nx; ++b) {
      mu[pair_position(nx, a, b)] = *axis.find_label(Pair(base[a], base[b]));
    }
  }
  return mu;
}

std::vector<int> identity_perm(std::size_t n) { return iota_vector(0, static_cast<int>(n)); }

}  // namespace

PerspectiveData tetrahedra_data(int m) {
  if (m < 1) throw Error(ErrorKind::BadSize, "need at least one tetrahedron", {m});
  PerspectiveData data;
  data.base = {1, 2, 3, 4};
  data.indices = iota_vector(5, m);
  data.axis = grassmannian(data.base);
  const auto mu = identity_mu(data.axis, data.base);
  data.mu.assign(static_cast<std::size_t>(m), mu);
  const std::vector<int> swap = {1, 0, 3, 2};  // (a a')(b b')
  data.xi.assign(static_cast<std::size_t>(m), std::vector<std::vector<int>>(static_cast<std::size_t>(m)));
  for (std::size_t i = 0; i < data.indices.size(); ++i) {
    for (std::size_t j = 0; j < data.indices.size(); ++j) data.xi[i][j] = i == j ? identity_perm(4) : swap;
  }
  return data;
}

PerspectiveData quasi_grassmannian_data(int n) {
  if (n < 4) throw Error(ErrorKind::BadSize, "quasi Grassmannian needs n >= 4", {n});
  const int k = n / 2;
  PerspectiveData data;
  data.indices = n % 2 == 1 ? std::vector<int>{0, 1, 2} : std::vector<int>{1, 2};
  data.base = iota_vector(3, 2 * k - 2);
  data.axis = grassmannian(data.base);
  const auto mu = identity_mu(data.axis, data.base);
  data.mu.assign(data.indices.size(), mu);
  const auto ny = data.base.size();
  std::vector<int> swap(ny);
  for (std::size_t a = 0; a < ny; ++a) swap[a] = static_cast<int>(a % 2 == 0 ? a + 1 : a - 1);
  data.xi.assign(data.indices.size(), std::vector<std::vector<int>>(data.indices.size(), identity_perm(ny)));
  for (std::size_t i = 0; i < data.indices.size(); ++i) {
    for (std::size_t j = 0; j < data.indices.size(); ++j) {
      const bool special = (data.indices[i] == 1 && data.indices[j] == 2) || (data.indices[i] == 2 && data.indices[j] == 1);
      if (special) data.xi[i][j] = swap;
    }
  }
  return data;
}

PerspectiveData veronesian_data(int k) {
  if (k < 3) throw Error(ErrorKind::BadSize, "Veronesian perspective form needs k >= 3", {k});
  const Configuration v = veronesian(k);
  auto point_of = [&](std::array<int, 3> e) { return *v.find_label(Multiset{e}); };
  // nu_z(s) = x^s y^(k-s) with (x, y) the letters following z cyclically.
  auto nu = [&](int z, int s) {
    std::array<int, 3> e{};
    e[static_cast<std::size_t>((z + 1) % 3)] = s;
    e[static_cast<std::size_t>((z + 2) % 3)] = k - s;
    return point_of(e);
  };
  const auto nx = static_cast<std::size_t>(k - 1);
  const auto pairs = static_cast<std::size_t>(binomial(k - 1, 2));

  // mu_z(s, t) = nu_z(s) ⊕ nu_z(t), as points of V(3, k).
  std::array<std::vector<PointIndex>, 3> mu_v;
  for (int z = 0; z < 3; ++z) {
    mu_v[static_cast<std::size_t>(z)].resize(pairs);
    for (std::size_t a = 0; a < nx; ++a) {
      for (std::size_t b = a + 1; b < nx; ++b) {
        const auto third = v.third_point(nu(z, static_cast<int>(a) + 1), nu(z, static_cast<int>(b) + 1));
        if (!third) invariant_violation("simplex vertices of V(3,k) are not joinable");
        mu_v[static_cast<std::size_t>(z)][pair_position(nx, a, b)] = *third;
      }
    }
  }

  PerspectiveData data;
  data.base = iota_vector(1, k - 1);
  data.indices = {k, k + 1, k + 2};

  // Axis abc·V(3, k-3), presented as the coimage of mu_a on Sub2(X).
  std::map<PointIndex, PointIndex> axis_index;  // V point -> axis point
  std::vector<PointLabel> axis_labels(pairs);
  for (std::size_t a = 0; a < nx; ++a) {
    for (std::size_t b = a + 1; b < nx; ++b) {
      const auto q = pair_position(nx, a, b);
      axis_index.emplace(mu_v[0][q], static_cast<PointIndex>(q));
      axis_labels[q] = Pair(data.base[a], data.base[b]);
    }
  }
  if (axis_index.size() != pairs) invariant_violation("mu_a is not injective");
  std::vector<Line> axis_lines;
  for (const auto& l : v.lines()) {
    if (axis_index.contains(l[0]) && axis_index.contains(l[1]) && axis_index.contains(l[2])) {
      axis_lines.push_back({axis_index.at(l[0]), axis_index.at(l[1]), axis_index.at(l[2])});
    }
  }
  data.axis = Configuration(std::move(axis_labels), std::move(axis_lines));

  data.mu.assign(3, std::vector<PointIndex>(pairs));
  for (std::size_t z = 0; z < 3; ++z) {
    for (std::size_t q = 0; q < pairs; ++q) {
      auto it = axis_index.find(mu_v[z][q]);
      if (it == axis_index.end()) invariant_violation("mu_z leaves the axis");
      data.mu[z][q] = it->second;
    }
  }
  // xi(x, y)(s) = k - s for x != y.
  std::vector<int> reflect(nx);
  for (std::size_t a = 0; a < nx; ++a) reflect[a] = static_cast<int>(nx - 1 - a);
  data.xi.assign(3, std::vector<std::vector<int>>(3, reflect));
  for (std::size_t z = 0; z < 3; ++z) data.xi[z][z] = identity_perm(nx);
  return data;
}

}  // namespace bsts
