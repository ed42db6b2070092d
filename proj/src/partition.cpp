#include "bsts/partition.hpp"

#include <algorithm>
#include <unordered_set>

namespace bsts {

PointSet hipcap(const PointSet& lhs, const PointSet& rhs) { return (lhs ^ rhs).complement(); }

std::vector<int> PartitionSpec::complement_part() const {
  std::vector<int> out;
  std::set_difference(ground.begin(), ground.end(), part.begin(), part.end(), std::back_inserter(out));
  return out;
}

namespace {

void require_full_pair_set(const Configuration& cfg, const std::vector<int>& ground) {
  const auto labels_ground = pair_ground_set(cfg);  // throws LabelsNotPairs
  const auto expected = static_cast<std::size_t>(binomial(static_cast<long long>(ground.size()), 2));
  const bool inside = std::includes(ground.begin(), ground.end(), labels_ground.begin(), labels_ground.end());
  if (!inside || cfg.point_count() != expected) {
    throw Error(ErrorKind::NotFullPairSet, "point labels are not the 2-subsets of the ground set",
                {static_cast<int>(cfg.point_count()), static_cast<int>(expected)});
  }
}

}  // namespace

PointSet partition_hyperplane(const Configuration& cfg, const PartitionSpec& spec) {
  std::vector<int> ground = spec.ground;
  std::sort(ground.begin(), ground.end());
  require_full_pair_set(cfg, ground);
  std::unordered_set<int> side(spec.part.begin(), spec.part.end());
  for (int a : spec.part) {
    if (!std::binary_search(ground.begin(), ground.end(), a)) {
      throw Error(ErrorKind::InvalidArgument, "partition part is not inside the ground set", {a});
    }
  }
  PointSet h = cfg.empty_set();
  for (std::size_t p = 0; p < cfg.point_count(); ++p) {
    const auto& pr = std::get<Pair>(cfg.labels()[p]);
    if (side.contains(pr.x) == side.contains(pr.y)) h.insert(static_cast<PointIndex>(p));
  }
  return h;
}

PointSet partition_hyperplane(const Configuration& cfg, std::span<const int> part) {
  PartitionSpec spec{pair_ground_set(cfg), {part.begin(), part.end()}};
  std::sort(spec.part.begin(), spec.part.end());
  return partition_hyperplane(cfg, spec);
}

std::vector<PointSet> generate_subalgebra(std::span<const PointSet> generators, std::size_t cap) {
  std::vector<PointSet> elements;
  std::unordered_set<PointSet, PointSetHash> seen;
  for (const auto& g : generators) {
    if (!elements.empty() && g.width() != elements.front().width()) {
      throw Error(ErrorKind::WidthMismatch, "generators of different widths");
    }
    if (g.is_full() || !seen.insert(g).second) continue;
    elements.push_back(g);
  }
  // Fixpoint: combine every new element with everything found before it.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      PointSet c = hipcap(elements[i], elements[j]);
      if (c.is_full() || !seen.insert(c).second) continue;
      if (elements.size() >= cap) {
        throw Error(ErrorKind::SearchBudgetExceeded, "subalgebra exceeds the closure cap");
      }
      elements.push_back(std::move(c));
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace bsts
